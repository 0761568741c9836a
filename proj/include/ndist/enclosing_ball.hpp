#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"

namespace ndist {

/// Smallest enclosing Euclidean ball with the indices of its support points.
struct EnclosingBall {
  Ball ball;
  std::vector<std::size_t> support;
};

/// Shuffle seed of the randomized support descent; fixed so support sets are
/// reproducible run to run.
inline constexpr std::uint64_t kEnclosingBallSeed = 0x9e3779b97f4a7c15ULL;

namespace detail {

struct SupportBall {
  Point center;
  double radius = -1.0;  // negative: empty
  std::vector<std::size_t> support;

  bool contains(const Point& p) const {
    return radius >= 0.0 && distance(center, p) <= radius * (1.0 + 1e-12);
  }
};

/// Smallest ball with every point of `idx` on its boundary, if the points are
/// affinely independent.
inline std::optional<SupportBall> circumball(const std::vector<Point>& pts,
                                             const std::vector<std::size_t>& idx) {
  SupportBall b;
  b.support = idx;
  if (idx.empty()) return b;
  const Point& p0 = pts[idx[0]];
  if (idx.size() == 1) {
    b.center = p0;
    b.radius = 0.0;
    return b;
  }
  const std::size_t k = idx.size() - 1;
  std::vector<Point> v;
  for (std::size_t a = 1; a <= k; ++a) v.push_back(pts[idx[a]] - p0);
  // 2 (v_a . v_b) lambda_b = |v_a|^2
  std::vector<double> m(k * k), rhs(k);
  double diag = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < k; ++c) m[a * k + c] = 2.0 * dot(v[a], v[c]);
    rhs[a] = dot(v[a], v[a]);
    diag = std::max(diag, m[a * k + a]);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::abs(m[r * k + col]) > std::abs(m[piv * k + col])) piv = r;
    }
    if (std::abs(m[piv * k + col]) <= 1e-12 * diag) return std::nullopt;
    for (std::size_t c = 0; c < k; ++c) std::swap(m[col * k + c], m[piv * k + c]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t r = col + 1; r < k; ++r) {
      const double f = m[r * k + col] / m[col * k + col];
      for (std::size_t c = col; c < k; ++c) m[r * k + c] -= f * m[col * k + c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> lambda(k);
  for (std::size_t r = k; r-- > 0;) {
    double acc = rhs[r];
    for (std::size_t c = r + 1; c < k; ++c) acc -= m[r * k + c] * lambda[c];
    lambda[r] = acc / m[r * k + r];
  }
  b.center = p0;
  for (std::size_t a = 0; a < k; ++a) b.center += v[a] * lambda[a];
  b.radius = 0.0;
  for (std::size_t i : idx) b.radius = std::max(b.radius, distance(b.center, pts[i]));
  return b;
}

/// Smallest ball enclosing a handful of points, by trying every subset.
inline SupportBall small_enclosing_ball(const std::vector<Point>& pts,
                                        const std::vector<std::size_t>& idx) {
  SupportBall best;
  const std::size_t k = idx.size();
  if (k == 1) return *circumball(pts, idx);
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t a = 0; a < k; ++a) {
      if (mask & (1u << a)) sub.push_back(idx[a]);
    }
    if (sub.size() < 2) continue;
    auto b = circumball(pts, sub);
    if (!b) continue;
    const bool all_in = std::all_of(idx.begin(), idx.end(),
                                    [&](std::size_t i) { return b->contains(pts[i]); });
    if (all_in && (best.radius < 0.0 || b->radius < best.radius)) best = std::move(*b);
  }
  return best;
}

inline SupportBall ball_on_boundary(const std::vector<Point>& pts,
                                    const std::vector<std::size_t>& r) {
  if (auto b = circumball(pts, r)) return *b;
  return small_enclosing_ball(pts, r);
}

/// Randomized incremental descent: the smallest ball enclosing order[0..n)
/// with every point of `boundary` on its surface.
inline SupportBall welzl(const std::vector<Point>& pts, const std::vector<std::size_t>& order,
                         std::size_t n, std::vector<std::size_t>& boundary, std::size_t q) {
  if (n == 0 || boundary.size() == q + 1) return ball_on_boundary(pts, boundary);
  SupportBall b = welzl(pts, order, n - 1, boundary, q);
  const std::size_t p = order[n - 1];
  if (b.contains(pts[p])) return b;
  boundary.push_back(p);
  b = welzl(pts, order, n - 1, boundary, q);
  boundary.pop_back();
  return b;
}

}  // namespace detail

/// Minimum-radius Euclidean ball containing all points (q in {2, 3}). Returns
/// nullopt when every point coincides (no positive-radius ball exists).
inline std::optional<EnclosingBall> enclosing_ball(const PointSet& ps) {
  const std::size_t q = ps.dim();
  if (q != 2 && q != 3) throw UnsupportedScaleError("enclosing_ball supports q = 2 or 3");
  if (ps.all_coincident()) return std::nullopt;

  // Work on distinct points; keep the first input index of each.
  std::vector<Point> pts;
  std::vector<std::size_t> first_index;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (std::find(pts.begin(), pts.end(), ps[i]) == pts.end()) {
      pts.push_back(ps[i]);
      first_index.push_back(i);
    }
  }
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(kEnclosingBallSeed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::size_t> boundary;
  detail::SupportBall b = detail::welzl(pts, order, pts.size(), boundary, q);

  // Reduce to a minimal subset of the support that determines the same ball.
  const detail::SupportBall reduced = detail::small_enclosing_ball(pts, b.support);
  if (std::abs(reduced.radius - b.radius) <= 1e-12 * b.radius) b = reduced;

  EnclosingBall out{Ball(b.center, b.radius, Norm::euclidean), {}};
  for (std::size_t i : b.support) out.support.push_back(first_index[i]);
  std::sort(out.support.begin(), out.support.end());
  return out;
}

inline double enclosing_ball_diameter_distance(const PointSet& ps) {
  const auto b = enclosing_ball(ps);
  return b ? 2.0 * b->ball.radius : 0.0;
}

/// Area of the smallest enclosing disk (q = 2 only).
inline double enclosing_ball_volume_distance(const PointSet& ps) {
  if (ps.dim() != 2) throw UnsupportedScaleError("enclosing_ball_volume_distance supports q = 2");
  const auto b = enclosing_ball(ps);
  return b ? std::numbers::pi * b->ball.radius * b->ball.radius : 0.0;
}

}  // namespace ndist
