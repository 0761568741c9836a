#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "ndist/classic.hpp"
#include "ndist/enclosing_ball.hpp"
#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"
#include "ndist/inner_balls.hpp"
#include "ndist/lambda.hpp"
#include "ndist/steiner.hpp"
#include "ndist/trees.hpp"

namespace ndist {

enum class DistanceKind {
  cardinality,
  max_gap,
  inner_chebyshev,
  inner_euclidean,
  mst,
  steiner,
  lines,
  enclosing_diameter,
  enclosing_area,
};

inline constexpr std::array kAllKinds = {
    DistanceKind::cardinality,     DistanceKind::max_gap,  DistanceKind::inner_chebyshev,
    DistanceKind::inner_euclidean, DistanceKind::mst,      DistanceKind::steiner,
    DistanceKind::lines,           DistanceKind::enclosing_diameter, DistanceKind::enclosing_area,
};

inline std::string_view to_string(DistanceKind k) {
  switch (k) {
    case DistanceKind::cardinality: return "cardinality";
    case DistanceKind::max_gap: return "max-gap";
    case DistanceKind::inner_chebyshev: return "inner-chebyshev";
    case DistanceKind::inner_euclidean: return "inner-euclidean";
    case DistanceKind::mst: return "mst";
    case DistanceKind::steiner: return "steiner";
    case DistanceKind::lines: return "lines";
    case DistanceKind::enclosing_diameter: return "enclosing-diameter";
    case DistanceKind::enclosing_area: return "enclosing-area";
  }
  return "?";
}

inline DistanceKind parse_kind(std::string_view name) {
  for (DistanceKind k : kAllKinds) {
    if (to_string(k) == name) return k;
  }
  throw UsageError("unknown distance kind '" + std::string(name) + "'");
}

/// Throws when `kind` cannot be evaluated on n points of R^q.
inline void check_applicable(DistanceKind kind, std::size_t n, std::size_t q) {
  if (n < 2) throw UsageError("need n >= 2");
  if (q < 1) throw UsageError("need q >= 1");
  const std::string what(to_string(kind));
  switch (kind) {
    case DistanceKind::max_gap:
      if (q != 1) throw UsageError(what + " is defined on R^1 (q = 1)");
      break;
    case DistanceKind::inner_chebyshev:
      if (q < 2) throw UsageError(what + " needs q >= 2; use max-gap for q = 1");
      break;
    case DistanceKind::lines:
      if (q < 2) throw UsageError(what + " needs q >= 2");
      break;
    case DistanceKind::steiner:
      if (q != 2) throw UnsupportedScaleError(what + " supports q = 2 only");
      if (n > kSteinerMaxTerminals) throw UnsupportedScaleError(what + " supports n <= 7");
      break;
    case DistanceKind::enclosing_diameter:
      if (q != 2 && q != 3) throw UnsupportedScaleError(what + " supports q = 2 or 3");
      break;
    case DistanceKind::enclosing_area:
      if (q != 2) throw UnsupportedScaleError(what + " supports q = 2 only");
      break;
    default:
      break;
  }
}

inline double evaluate(DistanceKind kind, const PointSet& ps) {
  switch (kind) {
    case DistanceKind::cardinality: return cardinality_distance(ps);
    case DistanceKind::max_gap: return max_gap_distance(ps);
    case DistanceKind::inner_chebyshev: return inner_chebyshev_ball_distance(ps).value;
    case DistanceKind::inner_euclidean: return inner_euclidean_ball_distance(ps).value;
    case DistanceKind::mst: return mst_distance(ps).total_length;
    case DistanceKind::steiner: return steiner_distance(ps).length;
    case DistanceKind::lines: return line_count_distance(ps);
    case DistanceKind::enclosing_diameter: return enclosing_ball_diameter_distance(ps);
    case DistanceKind::enclosing_area: return enclosing_ball_volume_distance(ps);
  }
  return 0.0;
}

/// sqrt(20 + 2 sqrt 2) / 7: supremum of the inner-Euclidean simplex ratio at n = 3.
inline double rho() { return std::sqrt(20.0 + 2.0 * std::numbers::sqrt2) / 7.0; }

/// Known bounds on the best constant. `lower` is attained or approached by a
/// construction; `upper` is proven (strict when `upper_strict`). Both equal
/// when the constant is known exactly.
struct ProvenBounds {
  std::optional<double> lower;
  std::optional<double> upper;
  bool upper_strict = false;
  bool exact() const { return lower && upper && *lower == *upper; }
};

inline ProvenBounds proven_bounds(DistanceKind kind, std::size_t n, std::size_t q) {
  const double nd = static_cast<double>(n);
  const double standard = 1.0 / (nd - 1.0);
  ProvenBounds b;
  if (n == 2 && kind != DistanceKind::enclosing_area) {
    b.lower = b.upper = 1.0;
    return b;
  }
  switch (kind) {
    case DistanceKind::cardinality:
      b.lower = b.upper = standard;
      break;
    case DistanceKind::max_gap:
    case DistanceKind::inner_chebyshev:
      b.lower = b.upper = 2.0 / nd;
      break;
    case DistanceKind::inner_euclidean:
      if (n == 3) {
        b.lower = b.upper = rho();
      } else {
        b.lower = solve_lambda_n(static_cast<int>(n)).lower_bound;
        b.upper = 1.0;
      }
      break;
    case DistanceKind::mst:
      if (n == 3) {
        b.lower = b.upper = 1.0 / std::sqrt(3.0);
      } else {
        b.lower = n == 4 ? std::numbers::sqrt2 / 4.0 : standard;
        b.upper = 2.0 / nd;
        b.upper_strict = true;
      }
      break;
    case DistanceKind::steiner:
      if (n == 3) {
        b.lower = b.upper = 0.5;
      } else {
        b.lower = standard;
        b.upper = 2.0 / nd;
        b.upper_strict = true;
      }
      break;
    case DistanceKind::lines:
      b.lower = 1.0 / (nd - 2.0 + 2.0 / nd);
      b.upper = 1.0 / (nd - 2.0);
      b.upper_strict = true;
      break;
    case DistanceKind::enclosing_diameter:
      b.lower = standard;
      if (q == 2) b.upper = standard;  // proven standard in the plane only
      break;
    case DistanceKind::enclosing_area:
      if (q == 2 && n >= 3) b.lower = b.upper = 1.0 / (nd - 1.5);
      break;
  }
  return b;
}

}  // namespace ndist
