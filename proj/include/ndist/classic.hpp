#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"

namespace ndist {

/// |{x_1, ..., x_n}| - 1 with exact coordinate equality.
inline double cardinality_distance(const PointSet& ps) {
  return static_cast<double>(ps.distinct().size()) - 1.0;
}

/// Largest gap between consecutive order statistics of reals.
inline double max_gap_distance(std::span<const double> xs) {
  if (xs.size() < 2) throw UsageError("max_gap_distance needs at least two values");
  std::vector<double> s(xs.begin(), xs.end());
  std::sort(s.begin(), s.end());
  double gap = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) gap = std::max(gap, s[i] - s[i - 1]);
  return gap;
}

inline double max_gap_distance(const PointSet& ps) {
  if (ps.dim() != 1) throw UsageError("max_gap_distance takes points of R^1");
  std::vector<double> xs;
  xs.reserve(ps.size());
  for (const Point& p : ps) xs.push_back(p[0]);
  return max_gap_distance(xs);
}

/// Whether c lies on the line through a and b (a != b), up to kGeomTol
/// relative to the span of the three points.
inline bool on_line(const Point& a, const Point& b, const Point& c) {
  const Point u = b - a;
  const Point w = c - a;
  const double uu = dot(u, u);
  const double t = dot(w, u) / uu;
  const Point perp = w - u * t;
  const double span = std::max(std::sqrt(uu), std::sqrt(dot(w, w)));
  return std::sqrt(dot(perp, perp)) <= kGeomTol * span;
}

/// Number of distinct lines through pairs of distinct points (q >= 2). Two
/// pairs define the same line when all four points are collinear.
inline double line_count_distance(const PointSet& ps) {
  if (ps.dim() < 2) throw UsageError("line_count_distance needs q >= 2");
  const std::vector<Point> pts = ps.distinct();
  std::vector<std::pair<std::size_t, std::size_t>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const bool seen = std::any_of(lines.begin(), lines.end(), [&](const auto& l) {
        return on_line(pts[l.first], pts[l.second], pts[i]) &&
               on_line(pts[l.first], pts[l.second], pts[j]);
      });
      if (!seen) lines.emplace_back(i, j);
    }
  }
  return static_cast<double>(lines.size());
}

}  // namespace ndist
