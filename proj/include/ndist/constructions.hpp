#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"
#include "ndist/lambda.hpp"
#include "ndist/simplex.hpp"

namespace ndist {

// Extremal configurations. Planar layouts are zero-padded when q > 2, except
// figure4 and circle-arc, which are stated for the plane only.
enum class Construction {
  collapse,
  midpoint_collapse,
  equilateral_centroid,
  ngon_centroid,
  figure4,
  circle_arc,
  circle_lines,
  collapse_pair_midpoint,
};

inline constexpr std::array kAllConstructions = {
    Construction::collapse,          Construction::midpoint_collapse, Construction::equilateral_centroid,
    Construction::ngon_centroid,     Construction::figure4,
    Construction::circle_arc,        Construction::circle_lines,
    Construction::collapse_pair_midpoint,
};

inline std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::collapse: return "collapse";
    case Construction::midpoint_collapse: return "midpoint-collapse";
    case Construction::equilateral_centroid: return "equilateral-centroid";
    case Construction::ngon_centroid: return "ngon-centroid";
    case Construction::figure4: return "figure4";
    case Construction::circle_arc: return "circle-arc";
    case Construction::circle_lines: return "circle-lines";
    case Construction::collapse_pair_midpoint: return "collapse-pair-midpoint";
  }
  return "?";
}

inline Construction parse_construction(std::string_view name) {
  for (Construction c : kAllConstructions) {
    if (to_string(c) == name) return c;
  }
  throw UsageError("unknown construction '" + std::string(name) + "'");
}

/// Default epsilon of the constructions whose supremum is not attained.
inline double default_epsilon(Construction c) {
  // circle-arc converges quadratically in epsilon; figure4 linearly.
  return c == Construction::circle_arc ? 1e-6 : 1e-3;
}

namespace detail {

inline Point planar(double x, double y, std::size_t q) {
  Point p = Point::zeros(q);
  p[0] = x;
  p[1] = y;
  return p;
}

inline void require(bool ok, Construction c, const std::string& why) {
  if (!ok) throw UsageError(std::string(to_string(c)) + ": " + why);
}

}  // namespace detail

inline Configuration construct(Construction name, std::size_t n, std::size_t q,
                               std::optional<double> epsilon = std::nullopt) {
  using detail::planar;
  using detail::require;
  using std::numbers::pi;
  const double eps = epsilon.value_or(default_epsilon(name));
  require(n >= 2, name, "needs n >= 2");
  require(q >= 1, name, "needs q >= 1");
  require(eps >= 0.0, name, "epsilon must be non-negative");
  std::vector<Point> pts;

  switch (name) {
    case Construction::collapse: {
      // x_1 != x_2 = ... = x_n = z
      Point e = Point::zeros(q);
      e[0] = 1.0;
      pts.push_back(Point::zeros(q));
      for (std::size_t i = 1; i < n; ++i) pts.push_back(e);
      return {PointSet(std::move(pts)), e};
    }
    case Construction::midpoint_collapse: {
      // x_1 != x_2 = ... = x_n, z = (x_1 + x_2) / 2. x_2 - x_1 is the all-ones
      // diagonal: with an axis-aligned offset a square beside z would still
      // have x_1 and x_2 on opposite faces.
      const Point e(std::vector<double>(q, 1.0));
      pts.push_back(Point::zeros(q));
      for (std::size_t i = 1; i < n; ++i) pts.push_back(e);
      return {PointSet(std::move(pts)), e * 0.5};
    }
    case Construction::equilateral_centroid: {
      require(n == 3, name, "needs n = 3");
      require(q >= 2, name, "needs q >= 2");
      const double h = std::sqrt(3.0) / 2.0;
      pts = {planar(0.0, 0.0, q), planar(1.0, 0.0, q), planar(0.5, h, q)};
      return {PointSet(std::move(pts)), planar(0.5, h / 3.0, q)};
    }
    case Construction::ngon_centroid: {
      require(n >= 3, name, "needs n >= 3");
      require(q >= 2, name, "needs q >= 2");
      for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        pts.push_back(planar(std::cos(t), std::sin(t), q));
      }
      return {PointSet(std::move(pts)), Point::zeros(q)};
    }
    case Construction::figure4: {
      require(n == 3 && q == 2, name, "needs n = 3, q = 2");
      const double s = std::numbers::sqrt2 / 2.0;
      pts = {Point{-1.0, 0.0}, Point{1.0, 0.0}, Point{s, s}};
      return {PointSet(std::move(pts)), Point{0.0, std::numbers::sqrt2 - 1.0 + eps}};
    }
    case Construction::circle_arc: {
      require(n >= 4 && q == 2, name, "needs n >= 4, q = 2");
      // x_1 = (-1, 0), x_2 = (1, 0); p = floor(n/2) - 1 points on the upper unit
      // circle at angles k * alpha from x_1 (clockwise), each doubled, the last
      // tripled for odd n. z is the midpoint of x_2 and the last arc point,
      // pushed away from the center by eps.
      const LambdaBound lb = solve_lambda_n(static_cast<int>(n));
      const double alpha = 2.0 * std::asin(lb.lambda);
      pts = {Point{-1.0, 0.0}, Point{1.0, 0.0}};
      for (int k = 1; k <= lb.p; ++k) {
        const Point p{-std::cos(k * alpha), std::sin(k * alpha)};
        pts.push_back(p);
        pts.push_back(p);
      }
      if (n % 2 == 1) pts.push_back(pts.back());
      const Point mid = midpoint(pts[1], pts.back());
      const double r = std::sqrt(dot(mid, mid));
      return {PointSet(std::move(pts)), mid * (1.0 + eps / r)};
    }
    case Construction::circle_lines: {
      require(q >= 2, name, "needs q >= 2");
      // Pairwise distinct points clockwise on the unit circle, z = x_1.
      for (std::size_t k = 0; k < n; ++k) {
        const double t = -2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        pts.push_back(planar(std::cos(t), std::sin(t), q));
      }
      Point z = pts.front();
      return {PointSet(std::move(pts)), std::move(z)};
    }
    case Construction::collapse_pair_midpoint: {
      // x_1 != x_2, x_3 = ... = x_n = z = (x_1 + x_2) / 2
      Point a = Point::zeros(q), b = Point::zeros(q);
      a[0] = -1.0;
      b[0] = 1.0;
      pts = {a, b};
      for (std::size_t i = 2; i < n; ++i) pts.push_back(Point::zeros(q));
      return {PointSet(std::move(pts)), Point::zeros(q)};
    }
  }
  throw UsageError("unknown construction");
}

inline Configuration construct(std::string_view name, std::size_t n, std::size_t q,
                               std::optional<double> epsilon = std::nullopt) {
  return construct(parse_construction(name), n, q, epsilon);
}

/// Constructions that accept (n, q), in declaration order.
inline std::vector<Construction> compatible_constructions(std::size_t n, std::size_t q) {
  std::vector<Construction> out;
  for (Construction c : kAllConstructions) {
    try {
      construct(c, n, q);
      out.push_back(c);
    } catch (const UsageError&) {
    }
  }
  return out;
}

}  // namespace ndist
