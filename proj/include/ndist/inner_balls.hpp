#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"

namespace ndist {

struct InnerBallResult {
  double value = 0.0;
  /// Indices (i, j), i < j, of the two points on the ball's boundary.
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::optional<Ball> ball;
};

// ---------------------------------------------------------------------------
// Euclidean inner balls: two input points span a diameter and no input point
// lies in the open interior.
// ---------------------------------------------------------------------------

/// True when the ball with diameter [x_i, x_j] has no other input point
/// strictly inside it (penetration beyond kInnerTol * |x_i - x_j|).
inline bool is_inner_ball_diameter(const PointSet& ps, std::size_t i, std::size_t j) {
  const double len = distance(ps[i], ps[j]);
  if (len == 0.0) return false;
  const Point c = midpoint(ps[i], ps[j]);
  const double limit = 0.5 * len - kInnerTol * len;
  for (std::size_t m = 0; m < ps.size(); ++m) {
    if (m == i || m == j) continue;
    if (distance(ps[m], c) < limit) return false;
  }
  return true;
}

namespace detail {

struct PairCandidate {
  double length;
  std::size_t i, j, axis;
};

inline bool longer_first(const PairCandidate& a, const PairCandidate& b) {
  if (a.length != b.length) return a.length > b.length;
  return std::tie(a.i, a.j, a.axis) < std::tie(b.i, b.j, b.axis);
}

}  // namespace detail

/// Diameter of a largest inner Euclidean ball. Pairs are tried in decreasing
/// length (ties by index pair) and the first admissible one is returned.
inline InnerBallResult inner_euclidean_ball_distance(const PointSet& ps) {
  std::vector<detail::PairCandidate> cands;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const double len = distance(ps[i], ps[j]);
      if (len > 0.0) cands.push_back({len, i, j, 0});
    }
  }
  std::sort(cands.begin(), cands.end(), detail::longer_first);
  for (const auto& c : cands) {
    if (is_inner_ball_diameter(ps, c.i, c.j)) {
      InnerBallResult r;
      r.value = c.length;
      r.witness_pair = {c.i, c.j};
      r.ball = Ball(midpoint(ps[c.i], ps[c.j]), 0.5 * c.length, Norm::euclidean);
      return r;
    }
  }
  // Only reachable when every pair has zero length (the closest distinct pair
  // is always admissible).
  return {};
}

/// Closed form for three points: the longest side for right/acute triangles,
/// the median side for obtuse ones.
inline double inner_euclidean_ball_distance_3(const Point& a, const Point& b, const Point& c) {
  std::array<double, 3> sides = {distance(b, c), distance(a, c), distance(a, b)};
  std::sort(sides.begin(), sides.end());
  switch (classify_triangle(a, b, c)) {
    case TriangleKind::acute:
    case TriangleKind::right:
      return sides[2];
    case TriangleKind::obtuse:
      return sides[1];
    case TriangleKind::degenerate:
      // Coincident pair: the remaining segment is a free diameter. Three
      // distinct collinear points: the middle one blocks the outer pair.
      if (sides[0] <= kGeomTol * sides[2]) return sides[2];
      return sides[1];
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Chebyshev inner balls (axis-aligned cubes).
// ---------------------------------------------------------------------------

namespace detail {

/// Searches a cube of edge `len` whose faces orthogonal to `axis` carry x_i and
/// x_j, with no other point in its (tolerance-shrunk) open interior. Returns
/// the lexicographically smallest feasible center on the candidate grid.
inline std::optional<Point> chebyshev_cube_center(const PointSet& ps, std::size_t i,
                                                  std::size_t j, std::size_t axis,
                                                  double len) {
  const std::size_t q = ps.dim();
  const Point& a = ps[i];
  const Point& b = ps[j];
  const double half = 0.5 * len;
  const double open_half = half - kInnerTol * len;
  const double c_axis = 0.5 * (a[axis] + b[axis]);

  std::vector<std::size_t> blockers;
  for (std::size_t m = 0; m < ps.size(); ++m) {
    if (m == i || m == j) continue;
    if (std::abs(ps[m][axis] - c_axis) < open_half) blockers.push_back(m);
  }

  // Candidate center coordinates per free axis.
  std::vector<std::vector<double>> grid(q);
  for (std::size_t t = 0; t < q; ++t) {
    if (t == axis) {
      grid[t] = {c_axis};
      continue;
    }
    const double lo = std::max(a[t], b[t]) - half;
    const double hi = std::min(a[t], b[t]) + half;
    std::vector<double>& g = grid[t];
    g = {lo, hi};
    for (std::size_t m : blockers) {
      for (double v : {ps[m][t] - half, ps[m][t] + half}) {
        if (v > lo && v < hi) g.push_back(v);
      }
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }

  std::vector<std::size_t> idx(q, 0);
  Point center = Point::zeros(q);
  while (true) {
    for (std::size_t t = 0; t < q; ++t) center[t] = grid[t][idx[t]];
    const bool blocked = std::any_of(blockers.begin(), blockers.end(), [&](std::size_t m) {
      for (std::size_t t = 0; t < q; ++t) {
        if (t == axis) continue;
        if (!(std::abs(ps[m][t] - center[t]) < open_half)) return false;
      }
      return true;
    });
    if (!blocked) return center;
    // Odometer in lexicographic order (axis 0 most significant).
    std::size_t t = q;
    while (t > 0) {
      --t;
      if (++idx[t] < grid[t].size()) break;
      idx[t] = 0;
      if (t == 0) return std::nullopt;
    }
  }
}

}  // namespace detail

/// Edge length of a largest inner Chebyshev ball (q >= 2).
inline InnerBallResult inner_chebyshev_ball_distance(const PointSet& ps) {
  if (ps.dim() < 2) {
    throw UsageError("inner Chebyshev ball needs q >= 2; use max_gap_distance for q = 1");
  }
  std::vector<detail::PairCandidate> cands;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const double len = distance(ps[i], ps[j], Norm::chebyshev);
      if (len == 0.0) continue;
      for (std::size_t k = 0; k < ps.dim(); ++k) {
        if (std::abs(ps[i][k] - ps[j][k]) == len) cands.push_back({len, i, j, k});
      }
    }
  }
  std::sort(cands.begin(), cands.end(), detail::longer_first);
  for (const auto& c : cands) {
    if (auto center = detail::chebyshev_cube_center(ps, c.i, c.j, c.axis, c.length)) {
      InnerBallResult r;
      r.value = c.length;
      r.witness_pair = {c.i, c.j};
      r.ball = Ball(std::move(*center), 0.5 * c.length, Norm::chebyshev);
      return r;
    }
  }
  return {};
}

}  // namespace ndist
