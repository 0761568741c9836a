#pragma once

#include <cmath>
#include <cstddef>

#include "ndist/errors.hpp"

namespace ndist {

/// Chebyshev polynomial of the first kind by the three-term recurrence.
inline double chebyshev_t(unsigned p, double x) {
  if (p == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (unsigned k = 1; k < p; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline constexpr int kBisectMaxIter = 200;

/// Bisection on a sign-changing bracket; returns the midpoint of the final
/// bracket once its width is at most `tol` (or after kBisectMaxIter halvings).
template <class F>
double bisect_root(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw PreconditionError("bisect_root: need lo < hi");
  if (!(tol > 0.0)) throw PreconditionError("bisect_root: tolerance must be positive");
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(flo * fhi < 0.0)) throw PreconditionError("bisect_root: no sign change on bracket");
  for (int it = 0; it < kBisectMaxIter && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ndist
