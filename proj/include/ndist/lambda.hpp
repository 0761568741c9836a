#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "ndist/errors.hpp"
#include "ndist/numeric.hpp"

namespace ndist {

/// Root of T_p(sqrt(1 - x^2)) = 2x on (0, sin(pi / (2p + 4))), p = floor(n/2) - 1,
/// and the resulting lower bound 1 / (n lambda) on the inner-Euclidean constant.
struct LambdaBound {
  int n = 0;
  int p = 0;
  double lambda = 0.0;
  double lower_bound = 0.0;
};

inline double lambda_equation(int p, double x) {
  return chebyshev_t(static_cast<unsigned>(p), std::sqrt(1.0 - x * x)) - 2.0 * x;
}

inline LambdaBound solve_lambda_n(int n) {
  if (n < 4) throw UsageError("solve_lambda_n needs n >= 4");
  LambdaBound b;
  b.n = n;
  b.p = n / 2 - 1;
  const double upper = std::sin(std::numbers::pi / (2.0 * b.p + 4.0));
  b.lambda = bisect_root([p = b.p](double x) { return lambda_equation(p, x); }, 0.0, upper, 1e-12);
  b.lower_bound = 1.0 / (n * b.lambda);

  const double chain[] = {b.lower_bound, 1.0 / (n * upper), (2.0 * b.p + 4.0) / (n * std::numbers::pi),
                          1.0 / std::numbers::pi};
  for (int k = 0; k + 1 < 4; ++k) {
    if (!(chain[k] > chain[k + 1])) {
      throw PreconditionError("lambda bound chain violated at n = " + std::to_string(n));
    }
  }
  return b;
}

/// Lower bounds 1 / (n lambda_n) printed in the reference table.
struct LambdaTableRow {
  int n;
  double reference;
};

inline const std::vector<LambdaTableRow>& lambda_reference_rows() {
  static const std::vector<LambdaTableRow> rows = {{4, 0.559},  {5, 0.447},  {6, 0.455}, {10, 0.391},
                                                   {20, 0.352}, {50, 0.331}, {80, 0.326}};
  return rows;
}

inline std::vector<LambdaBound> lambda_bound_table(const std::vector<int>& ns) {
  std::vector<LambdaBound> out;
  out.reserve(ns.size());
  for (int n : ns) out.push_back(solve_lambda_n(n));
  return out;
}

}  // namespace ndist
