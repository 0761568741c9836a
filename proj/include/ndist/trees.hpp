#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"

namespace ndist {

using Edge = std::pair<std::size_t, std::size_t>;

/// A tree embedded in R^q. `vertices` may carry Steiner points after the terminals.
struct Tree {
  std::vector<Point> vertices;
  std::vector<Edge> edges;
  double total_length = 0.0;
};

/// Sums edge lengths in ascending order so that two routes producing the same
/// edge multiset agree bit for bit.
inline double tree_length(const std::vector<Point>& vertices, const std::vector<Edge>& edges) {
  std::vector<double> lens;
  lens.reserve(edges.size());
  for (const auto& [u, v] : edges) lens.push_back(distance(vertices[u], vertices[v]));
  std::sort(lens.begin(), lens.end());
  return std::accumulate(lens.begin(), lens.end(), 0.0);
}

/// Euclidean minimum spanning tree of the complete graph (Prim, O(n^2)).
/// Ties go to the lowest vertex index.
inline Tree mst_distance(const PointSet& ps) {
  const std::size_t n = ps.size();
  Tree t;
  t.vertices = ps.points();
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, 0);
  std::vector<bool> in_tree(n, false);
  key[0] = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (u == n || key[v] < key[u])) u = v;
    }
    in_tree[u] = true;
    if (step > 0) t.edges.emplace_back(std::min(parent[u], u), std::max(parent[u], u));
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double d = distance(ps[u], ps[v]);
      if (d < key[v]) {
        key[v] = d;
        parent[v] = u;
      }
    }
  }
  t.total_length = tree_length(t.vertices, t.edges);
  return t;
}

inline constexpr std::size_t kBruteForceMstMax = 8;

/// Minimum over all n^(n-2) labelled spanning trees, decoded from Prüfer
/// sequences. Test oracle only.
inline double mst_distance_bruteforce(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n > kBruteForceMstMax) {
    throw UnsupportedScaleError("mst_distance_bruteforce supports at most 8 points");
  }
  if (n == 2) return distance(ps[0], ps[1]);

  std::vector<std::size_t> seq(n - 2, 0);
  std::vector<std::size_t> degree(n);
  std::vector<Edge> edges;
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::fill(degree.begin(), degree.end(), 1);
    for (std::size_t s : seq) ++degree[s];
    edges.clear();
    for (std::size_t s : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, s);
      --degree[leaf];
      --degree[s];
    }
    std::size_t u = n, v = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (degree[k] == 1) (u == n ? u : v) = k;
    }
    edges.emplace_back(u, v);
    best = std::min(best, tree_length(ps.points(), edges));

    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Fermat point and three-terminal Steiner trees.
// ---------------------------------------------------------------------------

inline constexpr int kFermatMaxIter = 10000;

/// Interior angle at `v` of the triangle (v, a, b), in [0, pi].
inline double vertex_angle(const Point& v, const Point& a, const Point& b) {
  const Point u = a - v;
  const Point w = b - v;
  const double nu = std::sqrt(dot(u, u));
  const double nw = std::sqrt(dot(w, w));
  if (nu == 0.0 || nw == 0.0) return 0.0;
  return std::acos(std::clamp(dot(u, w) / (nu * nw), -1.0, 1.0));
}

/// Minimizer of |F - a| + |F - b| + |F - c|.
inline Point fermat_point(const Point& a, const Point& b, const Point& c) {
  a.check_same_dim(b);
  a.check_same_dim(c);
  if (a == b || a == c) return a;
  if (b == c) return b;

  const std::array<const Point*, 3> v = {&a, &b, &c};
  std::array<double, 3> angle{};
  for (int k = 0; k < 3; ++k) angle[k] = vertex_angle(*v[k], *v[(k + 1) % 3], *v[(k + 2) % 3]);
  const int widest = static_cast<int>(std::max_element(angle.begin(), angle.end()) - angle.begin());
  if (angle[widest] >= 2.0 * std::numbers::pi / 3.0 - kGeomTol) return *v[widest];

  // Barycentric seed a_k / sin(A_k + pi/3), then re-weighted averaging
  // (Weiszfeld) until the iterate stops moving.
  const double scale = std::max({distance(a, b), distance(b, c), distance(a, c)});
  Point x = Point::zeros(a.dim());
  double wsum = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double opposite = distance(*v[(k + 1) % 3], *v[(k + 2) % 3]);
    const double w = opposite / std::sin(angle[k] + std::numbers::pi / 3.0);
    x += *v[k] * w;
    wsum += w;
  }
  x *= 1.0 / wsum;

  const double eps = 1e-12 * scale;
  for (int it = 0; it < kFermatMaxIter; ++it) {
    Point next = Point::zeros(a.dim());
    double den = 0.0;
    for (const Point* p : v) {
      const double w = 1.0 / std::max(distance(*p, x), eps);
      next += *p * w;
      den += w;
    }
    next *= 1.0 / den;
    const double move = distance(next, x);
    x = std::move(next);
    if (move < 1e-13 * scale) break;
  }
  return x;
}

/// Result of a Steiner minimal tree computation. `tree` lists the terminals
/// (first occurrence of each distinct input point, in input order) followed by
/// the Steiner points.
struct SteinerResult {
  double length = 0.0;
  std::vector<Point> steiner_points;
  std::string topology_id;
  Tree tree;
};

namespace detail {

/// Canonical text of an edge list: terminals print as t<input index>, Steiner
/// points as s<k>; each edge is ordered and the list is sorted.
inline std::string encode_topology(const std::vector<Edge>& edges,
                                   const std::vector<std::size_t>& terminal_labels) {
  auto label = [&](std::size_t v) {
    return v < terminal_labels.size() ? "t" + std::to_string(terminal_labels[v])
                                      : "s" + std::to_string(v - terminal_labels.size());
  };
  std::vector<std::string> parts;
  for (auto [u, v] : edges) {
    std::string lu = label(u), lv = label(v);
    if (lv < lu) std::swap(lu, lv);
    parts.push_back(lu + "-" + lv);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace detail

/// Steiner minimal tree on three terminals: one Fermat point.
inline SteinerResult steiner3_distance(const Point& a, const Point& b, const Point& c) {
  const Point f = fermat_point(a, b, c);
  SteinerResult r;
  r.length = distance(a, f) + distance(b, f) + distance(c, f);

  // Terminals reported once each, labelled by first input index.
  std::vector<Point> terms;
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; const Point* p : {&a, &b, &c}) {
    if (std::find(terms.begin(), terms.end(), *p) == terms.end()) {
      terms.push_back(*p);
      labels.push_back(k);
    }
    ++k;
  }
  r.tree.vertices = terms;
  const auto at = std::find(terms.begin(), terms.end(), f);
  if (at == terms.end()) {
    r.steiner_points.push_back(f);
    r.tree.vertices.push_back(f);
    const std::size_t s = terms.size();
    for (std::size_t k = 0; k < terms.size(); ++k) r.tree.edges.emplace_back(k, s);
  } else {
    const std::size_t hub = static_cast<std::size_t>(at - terms.begin());
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k != hub) r.tree.edges.emplace_back(std::min(k, hub), std::max(k, hub));
    }
  }
  r.tree.total_length = r.length;
  r.topology_id = detail::encode_topology(r.tree.edges, labels);
  return r;
}

}  // namespace ndist
