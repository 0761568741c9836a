#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ndist/errors.hpp"

namespace ndist {

/// Relative tolerance for collinearity / right-angle classification. It is
/// applied against the largest squared side length of the triangle at hand.
inline constexpr double kGeomTol = 1e-9;

/// Relative penetration a point needs before it counts as strictly inside an
/// inner ball (scaled by the candidate ball size).
inline constexpr double kInnerTol = 1e-9;

/// A point of R^q with finite coordinates.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords) : coords_(coords) { validate(); }
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

  static Point zeros(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t k) const { return coords_[k]; }
  double& operator[](std::size_t k) { return coords_[k]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

  Point& operator+=(const Point& o) {
    check_same_dim(o);
    for (std::size_t k = 0; k < dim(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  Point& operator-=(const Point& o) {
    check_same_dim(o);
    for (std::size_t k = 0; k < dim(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  Point& operator*=(double s) {
    for (double& c : coords_) c *= s;
    return *this;
  }
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }

  void check_same_dim(const Point& o) const {
    if (o.dim() != dim()) {
      throw UsageError("dimension mismatch: " + std::to_string(dim()) + " vs " +
                       std::to_string(o.dim()));
    }
  }

 private:
  void validate() const {
    if (coords_.empty()) throw UsageError("a point needs at least one coordinate");
    for (double c : coords_) {
      if (!std::isfinite(c)) throw UsageError("point coordinates must be finite");
    }
  }

  std::vector<double> coords_;
};

inline double dot(const Point& a, const Point& b) {
  a.check_same_dim(b);
  double s = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) s += a[k] * b[k];
  return s;
}

inline Point midpoint(const Point& a, const Point& b) { return (a + b) * 0.5; }

/// Ordered tuple (x_1, ..., x_n) of points sharing one dimension. Duplicates allowed.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::initializer_list<Point> pts) : points_(pts) { validate(); }
  explicit PointSet(std::vector<Point> pts) : points_(std::move(pts)) { validate(); }

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return points_.empty() ? 0 : points_.front().dim(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Copy with the i-th point replaced by z.
  PointSet replaced(std::size_t i, const Point& z) const {
    std::vector<Point> pts = points_;
    pts.at(i) = z;
    return PointSet(std::move(pts));
  }

  bool all_coincident() const {
    return std::all_of(points_.begin(), points_.end(),
                       [&](const Point& p) { return p == points_.front(); });
  }

  /// Distinct points in first-occurrence order (exact coordinate equality).
  std::vector<Point> distinct() const {
    std::vector<Point> out;
    for (const Point& p : points_) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
  }

 private:
  void validate() const {
    if (points_.size() < 2) throw UsageError("a point set needs at least two points");
    for (const Point& p : points_) points_.front().check_same_dim(p);
  }

  std::vector<Point> points_;
};

enum class Norm { euclidean, chebyshev };

/// Closed ball B_r[c] in the given norm (a hypercube for Chebyshev).
struct Ball {
  Point center;
  double radius = 0.0;
  Norm norm = Norm::euclidean;

  Ball() = default;
  Ball(Point c, double r, Norm nm) : center(std::move(c)), radius(r), norm(nm) {
    if (!(radius > 0.0)) throw UsageError("ball radius must be positive");
  }
};

inline double distance(const Point& a, const Point& b, Norm norm = Norm::euclidean) {
  a.check_same_dim(b);
  if (norm == Norm::chebyshev) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
  }
  double s = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double squared_distance(const Point& a, const Point& b) {
  a.check_same_dim(b);
  double s = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

/// Dense symmetric n x n matrix, row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

inline DistanceMatrix pairwise_distances(const PointSet& ps, Norm norm = Norm::euclidean) {
  DistanceMatrix m(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) m.set(i, j, distance(ps[i], ps[j], norm));
  }
  return m;
}

enum class TriangleKind { acute, right, obtuse, degenerate };

inline const char* to_string(TriangleKind k) {
  switch (k) {
    case TriangleKind::acute: return "acute";
    case TriangleKind::right: return "right";
    case TriangleKind::obtuse: return "obtuse";
    case TriangleKind::degenerate: return "degenerate";
  }
  return "?";
}

/// Classification by the largest angle, from squared side lengths.
inline TriangleKind classify_triangle(const Point& a, const Point& b, const Point& c) {
  a.check_same_dim(b);
  a.check_same_dim(c);
  std::array<double, 3> sq = {squared_distance(b, c), squared_distance(a, c),
                              squared_distance(a, b)};
  std::sort(sq.begin(), sq.end());
  const double largest = sq[2];
  if (largest == 0.0) return TriangleKind::degenerate;

  // Heron in squared sides: 16 area^2 = 2(s0 s1 + s1 s2 + s0 s2) - (s0^2 + s1^2 + s2^2).
  // Built from the sorted squares so the result does not depend on argument order.
  const double area16 = 2.0 * (sq[0] * sq[1] + sq[1] * sq[2] + sq[0] * sq[2]) -
                        (sq[0] * sq[0] + sq[1] * sq[1] + sq[2] * sq[2]);
  if (area16 <= 4.0 * kGeomTol * largest * largest) return TriangleKind::degenerate;

  const double excess = sq[0] + sq[1] - largest;
  if (std::abs(excess) <= kGeomTol * largest) return TriangleKind::right;
  return excess > 0.0 ? TriangleKind::acute : TriangleKind::obtuse;
}

}  // namespace ndist
