#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"
#include "ndist/trees.hpp"

namespace ndist {

inline constexpr std::size_t kSteinerMaxTerminals = 7;
inline constexpr int kSteinerMaxIter = 20000;
/// Certified optimality gap, relative to the largest terminal distance.
inline constexpr double kSteinerGapTol = 1e-11;

/// Number of full Steiner topologies on m >= 3 terminals: (2m-5)!!.
inline std::size_t full_topology_count(std::size_t m) {
  std::size_t c = 1;
  for (std::size_t k = 3; k < m; ++k) c *= 2 * k - 3;
  return c;
}

namespace detail {

using Vec2 = std::array<double, 2>;

inline double dist2d(const Vec2& a, const Vec2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

/// Fixed full topology: vertices [0, m) are terminals, [m, 2m-2) Steiner points.
struct FullTopology {
  std::vector<Edge> edges;
};

/// All full topologies on m terminals, built by inserting terminal k into every
/// edge of each topology on k terminals.
inline std::vector<FullTopology> enumerate_full_topologies(std::size_t m) {
  std::vector<FullTopology> out;
  FullTopology base;
  base.edges = {{0, m}, {1, m}, {2, m}};
  auto grow = [&](auto&& self, const FullTopology& t, std::size_t k) -> void {
    if (k == m) {
      out.push_back(t);
      return;
    }
    const std::size_t s = m + (k - 2);
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      FullTopology next = t;
      const auto [u, v] = t.edges[e];
      next.edges[e] = {u, s};
      next.edges.emplace_back(s, v);
      next.edges.emplace_back(k, s);
      self(self, next, k + 1);
    }
  };
  grow(grow, base, 3);
  return out;
}

/// Solves the SPD system A x = b in place (Gaussian elimination, n <= 5).
inline void solve_small(std::vector<double>& a, std::vector<Vec2>& b, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
      std::swap(b[col], b[piv]);
    }
    const double d = a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / d;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r][0] -= f * b[col][0];
      b[r][1] -= f * b[col][1];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    Vec2 acc = b[r];
    for (std::size_t c = r + 1; c < n; ++c) {
      acc[0] -= a[r * n + c] * b[c][0];
      acc[1] -= a[r * n + c] * b[c][1];
    }
    b[r] = {acc[0] / a[r * n + r], acc[1] / a[r * n + r]};
  }
}

struct OptimizedTopology {
  double length = std::numeric_limits<double>::infinity();
  std::vector<Vec2> vertices;  // terminals then Steiner points
};

/// Minimizes the total length of a fixed topology over its Steiner point
/// coordinates. Each step replaces every Steiner point by the inverse-length
/// weighted average of its neighbours, solved jointly as one linear system.
/// The objective is convex in the Steiner coordinates, so the fixed point is
/// the topology's global optimum (possibly with Steiner points on terminals).
///
/// A dual bound certifies progress: edge vectors w_e with |w_e| <= 1 and zero
/// divergence at every Steiner point give sum_e w_e . (x_u - x_v), a value that
/// does not depend on the Steiner points and never exceeds any tree length.
/// The w_e are the unit edge directions plus the least-norm correction that
/// cancels their divergence, scaled back into the unit ball. Iteration stops
/// when the bound exceeds `cutoff` (the topology cannot win; length stays
/// infinite), when the gap falls below kSteinerGapTol * scale, or on stall.
inline OptimizedTopology optimize_topology(const std::vector<Vec2>& terminals,
                                           const FullTopology& topo, double scale,
                                           double cutoff = std::numeric_limits<double>::infinity()) {
  const std::size_t m = terminals.size();
  const std::size_t s = m - 2;
  OptimizedTopology res;
  res.vertices = terminals;
  res.vertices.resize(m + s, Vec2{0.0, 0.0});
  const double eps = 1e-12 * scale;

  std::vector<double> a(s * s);
  std::vector<Vec2> b(s);
  auto assemble = [&](auto weight_of) {
    std::fill(a.begin(), a.end(), 0.0);
    std::fill(b.begin(), b.end(), Vec2{0.0, 0.0});
    for (const auto& [u, v] : topo.edges) {
      const double w = weight_of(u, v);
      const bool su = u >= m, sv = v >= m;
      if (su) a[(u - m) * s + (u - m)] += w;
      if (sv) a[(v - m) * s + (v - m)] += w;
      if (su && sv) {
        a[(u - m) * s + (v - m)] -= w;
        a[(v - m) * s + (u - m)] -= w;
      } else if (su) {
        b[u - m][0] += w * res.vertices[v][0];
        b[u - m][1] += w * res.vertices[v][1];
      } else if (sv) {
        b[v - m][0] += w * res.vertices[u][0];
        b[v - m][1] += w * res.vertices[u][1];
      }
    }
  };
  auto solve_with = [&](auto weight_of) {
    assemble(weight_of);
    solve_small(a, b, s);
    for (std::size_t k = 0; k < s; ++k) res.vertices[m + k] = b[k];
  };
  auto total = [&] {
    double sum = 0.0;
    for (const auto& [u, v] : topo.edges) sum += dist2d(res.vertices[u], res.vertices[v]);
    return sum;
  };

  const std::size_t ne = topo.edges.size();
  std::vector<Vec2> dir(ne), diff(ne);
  auto dual_bound = [&] {
    assemble([](std::size_t, std::size_t) { return 1.0; });  // Steiner Laplacian
    std::fill(b.begin(), b.end(), Vec2{0.0, 0.0});
    for (std::size_t e = 0; e < ne; ++e) {
      const auto [u, v] = topo.edges[e];
      diff[e] = {res.vertices[u][0] - res.vertices[v][0], res.vertices[u][1] - res.vertices[v][1]};
      const double d = std::hypot(diff[e][0], diff[e][1]);
      dir[e] = d > 0.0 ? Vec2{diff[e][0] / d, diff[e][1] / d} : Vec2{0.0, 0.0};
      // right-hand side: minus the divergence
      if (u >= m) b[u - m][0] -= dir[e][0], b[u - m][1] -= dir[e][1];
      if (v >= m) b[v - m][0] += dir[e][0], b[v - m][1] += dir[e][1];
    }
    solve_small(a, b, s);
    double norm = 1.0, value = 0.0;
    for (std::size_t e = 0; e < ne; ++e) {
      const auto [u, v] = topo.edges[e];
      Vec2 w = dir[e];
      for (std::size_t c = 0; c < 2; ++c) {
        if (u >= m) w[c] += b[u - m][c];
        if (v >= m) w[c] -= b[v - m][c];
      }
      norm = std::max(norm, std::hypot(w[0], w[1]));
      value += w[0] * diff[e][0] + w[1] * diff[e][1];
    }
    return value / norm;
  };

  solve_with([](std::size_t, std::size_t) { return 1.0; });
  double len = total();
  for (int it = 0; it < kSteinerMaxIter; ++it) {
    const double lb = dual_bound();
    if (lb > cutoff) return res;
    if (len - lb <= kSteinerGapTol * scale) break;
    solve_with([&](std::size_t u, std::size_t v) {
      return 1.0 / std::max(dist2d(res.vertices[u], res.vertices[v]), eps);
    });
    const double next = total();
    const bool stalled = !(len - next >= 1e-15 * scale);
    len = std::min(len, next);
    if (stalled) break;
  }
  res.length = total();
  return res;
}

}  // namespace detail

/// Euclidean Steiner minimal tree in the plane, exact over topologies for up
/// to seven terminals. Duplicate terminals are merged first (they add zero
/// length). Every full topology is optimized; degenerate trees appear as
/// limits in which Steiner points reach terminals or each other.
inline SteinerResult steiner_distance(const PointSet& ps) {
  if (ps.dim() != 2) throw UnsupportedScaleError("steiner_distance supports q = 2 only");
  if (ps.size() > kSteinerMaxTerminals) {
    throw UnsupportedScaleError("steiner_distance supports at most 7 terminals");
  }

  std::vector<Point> terms;
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (std::find(terms.begin(), terms.end(), ps[i]) == terms.end()) {
      terms.push_back(ps[i]);
      labels.push_back(i);
    }
  }
  const std::size_t m = terms.size();

  SteinerResult r;
  if (m == 1) {
    r.tree.vertices = terms;
    return r;
  }
  if (m == 2) {
    r.length = distance(terms[0], terms[1]);
    r.tree.vertices = terms;
    r.tree.edges = {{0, 1}};
    r.tree.total_length = r.length;
    r.topology_id = detail::encode_topology(r.tree.edges, labels);
    return r;
  }
  if (m == 3) {
    r = steiner3_distance(terms[0], terms[1], terms[2]);
    r.topology_id = detail::encode_topology(r.tree.edges, labels);
    return r;
  }

  std::vector<detail::Vec2> tv(m);
  for (std::size_t k = 0; k < m; ++k) tv[k] = {terms[k][0], terms[k][1]};
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) scale = std::max(scale, detail::dist2d(tv[i], tv[j]));
  }

  const Tree mst = mst_distance(PointSet(terms));
  const auto topologies = detail::enumerate_full_topologies(m);
  detail::OptimizedTopology best;
  std::size_t best_topo = 0;
  for (std::size_t t = 0; t < topologies.size(); ++t) {
    auto opt = detail::optimize_topology(tv, topologies[t], scale,
                                         std::min(best.length, mst.total_length));
    if (opt.length < best.length) {
      best = std::move(opt);
      best_topo = t;
    }
  }
  if (!(best.length < mst.total_length)) {
    r.length = mst.total_length;
    r.tree = mst;
    r.topology_id = detail::encode_topology(r.tree.edges, labels);
    return r;
  }

  // Contract edges shorter than 1e-9 * scale: Steiner points collapsed onto a
  // terminal are dropped, coincident Steiner points are merged.
  const std::size_t nv = best.vertices.size();
  std::vector<std::size_t> root(nv);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  const double collapse = 1e-9 * scale;
  for (const auto& [u, v] : topologies[best_topo].edges) {
    if (detail::dist2d(best.vertices[u], best.vertices[v]) >= collapse) continue;
    std::size_t ru = find(u), rv = find(v);
    if (ru == rv || (ru < m && rv < m)) continue;
    if (rv < m) std::swap(ru, rv);
    root[rv] = ru;  // terminals stay roots
  }

  std::vector<std::size_t> relabel(nv, nv);
  r.tree.vertices = terms;
  for (std::size_t k = 0; k < m; ++k) relabel[k] = k;
  for (std::size_t v = m; v < nv; ++v) {
    const std::size_t rv = find(v);
    if (rv < m) {
      relabel[v] = rv;
    } else if (relabel[rv] == nv) {
      relabel[rv] = r.tree.vertices.size();
      const auto& p = best.vertices[rv];
      r.tree.vertices.push_back(Point{p[0], p[1]});
      r.steiner_points.push_back(r.tree.vertices.back());
    }
    relabel[v] = relabel[rv];
  }
  for (const auto& [u, v] : topologies[best_topo].edges) {
    std::size_t a = relabel[u], b = relabel[v];
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (std::find(r.tree.edges.begin(), r.tree.edges.end(), Edge{a, b}) == r.tree.edges.end()) {
      r.tree.edges.emplace_back(a, b);
    }
  }
  r.length = best.length;

  if (mst.total_length < r.length) {
    r.length = mst.total_length;
    r.steiner_points.clear();
    r.tree = mst;
  }
  r.tree.total_length = r.length;
  r.topology_id = detail::encode_topology(r.tree.edges, labels);
  return r;
}

}  // namespace ndist
