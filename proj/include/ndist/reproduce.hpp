#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ndist/constructions.hpp"
#include "ndist/kinds.hpp"
#include "ndist/lambda.hpp"
#include "ndist/simplex.hpp"

namespace ndist {

struct Table1Row {
  int n = 0;
  double lambda = 0.0;
  double bound = 0.0;      // 1 / (n lambda_n)
  double reference = 0.0;  // published 3-decimal value
  bool ok = false;
};

inline constexpr double kTable1Tol = 5e-4;
inline constexpr double kLambdaClosedFormTol = 1e-10;

struct Table1 {
  std::vector<Table1Row> rows;
  double lambda4_error = 0.0;  // |lambda_4 - 1/sqrt 5|
  double lambda6_error = 0.0;  // |lambda_6 - (sqrt 3 - 1)/2|
  bool ok() const {
    bool all = lambda4_error <= kLambdaClosedFormTol && lambda6_error <= kLambdaClosedFormTol;
    for (const auto& r : rows) all = all && r.ok;
    return all;
  }
};

inline Table1 reproduce_table1() {
  Table1 t;
  for (const auto& ref : lambda_reference_rows()) {
    const LambdaBound b = solve_lambda_n(ref.n);
    t.rows.push_back({ref.n, b.lambda, b.lower_bound, ref.reference,
                      std::abs(b.lower_bound - ref.reference) <= kTable1Tol});
  }
  t.lambda4_error = std::abs(solve_lambda_n(4).lambda - 1.0 / std::sqrt(5.0));
  t.lambda6_error = std::abs(solve_lambda_n(6).lambda - (std::sqrt(3.0) - 1.0) / 2.0);
  return t;
}

/// How a construction's ratio relates to its target.
enum class Relation {
  equal,     // |ratio - target| <= tol
  approach,  // ratio < target and target - ratio <= tol
};

struct ConstantRow {
  DistanceKind kind = DistanceKind::cardinality;
  Construction construction = Construction::midpoint_collapse;
  std::size_t n = 0, q = 0;
  std::optional<double> epsilon;
  double ratio = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::equal;
  bool ok = false;
};

inline constexpr double kConstantTol = 1e-12;

inline std::vector<ConstantRow> reproduce_constants() {
  std::vector<ConstantRow> rows;
  auto add = [&](DistanceKind kind, Construction c, std::size_t n, std::size_t q, double target,
                 double tol, Relation rel, std::optional<double> eps = std::nullopt) {
    ConstantRow r;
    r.kind = kind;
    r.construction = c;
    r.n = n;
    r.q = q;
    r.epsilon = eps;
    r.target = target;
    r.tolerance = tol;
    r.relation = rel;
    r.ratio = simplex_ratio(construct(c, n, q, eps), kind).ratio;
    r.ok = rel == Relation::equal ? std::abs(r.ratio - target) <= tol
                                  : r.ratio < target && target - r.ratio <= tol;
    rows.push_back(r);
  };
  using K = DistanceKind;
  using C = Construction;
  const auto eq = Relation::equal;
  for (std::size_t n = 3; n <= 6; ++n) {
    const double nd = static_cast<double>(n);
    add(K::inner_chebyshev, C::midpoint_collapse, n, 2, 2.0 / nd, kConstantTol, eq);
    add(K::max_gap, C::midpoint_collapse, n, 1, 2.0 / nd, kConstantTol, eq);
    add(K::cardinality, C::collapse, n, 2, 1.0 / (nd - 1.0), kConstantTol, eq);
    add(K::enclosing_diameter, C::collapse, n, 2, 1.0 / (nd - 1.0), kConstantTol, eq);
    add(K::enclosing_area, C::collapse_pair_midpoint, n, 2, 1.0 / (nd - 1.5), kConstantTol, eq);
  }
  add(K::mst, C::equilateral_centroid, 3, 2, 1.0 / std::sqrt(3.0), kConstantTol, eq);
  add(K::mst, C::ngon_centroid, 4, 2, std::numbers::sqrt2 / 4.0, kConstantTol, eq);
  add(K::steiner, C::equilateral_centroid, 3, 2, 0.5, kConstantTol, eq);
  for (std::size_t n = 4; n <= 8; ++n) {
    const double nd = static_cast<double>(n);
    add(K::lines, C::circle_lines, n, 2, nd / (nd * nd - 2.0 * nd + 2.0), kConstantTol, eq);
  }
  add(K::inner_euclidean, C::figure4, 3, 2, rho(), 1e-3, Relation::approach, 1e-3);
  for (int n : {4, 5, 6, 10}) {
    add(K::inner_euclidean, C::circle_arc, static_cast<std::size_t>(n), 2,
        solve_lambda_n(n).lower_bound, 1e-9, eq);
  }
  return rows;
}

inline std::string_view to_string(Relation r) { return r == Relation::equal ? "equal" : "approach"; }

}  // namespace ndist
