#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ndist/search.hpp"

using namespace ndist;
using K = DistanceKind;

namespace {
SearchOptions quick(std::uint64_t seed, std::size_t restarts = 24) {
  SearchOptions o;
  o.seed = seed;
  o.restarts = restarts;
  return o;
}
}  // namespace

TEST(Search, MstTriangle) {
  const auto r = estimate_best_constant(K::mst, 3, 2, quick(42));
  EXPECT_NEAR(r.best.ratio, 1 / std::sqrt(3.0), 1e-4);
  EXPECT_LE(r.best.ratio, 1 / std::sqrt(3.0) + 1e-9);
  EXPECT_GT(r.evaluations, 0u);
}

TEST(Search, ChebyshevFour) {
  const auto r = estimate_best_constant(K::inner_chebyshev, 4, 2, quick(42));
  EXPECT_NEAR(r.best.ratio, 0.5, 1e-4);
}

TEST(Search, MaxGapThree) {
  const auto r = estimate_best_constant(K::max_gap, 3, 1, quick(1));
  EXPECT_NEAR(r.best.ratio, 2.0 / 3.0, 1e-9);
}

TEST(Search, SteinerTriangle) {
  const auto r = estimate_best_constant(K::steiner, 3, 2, quick(42, 8));
  EXPECT_NEAR(r.best.ratio, 0.5, 1e-4);
}

TEST(Search, InnerEuclideanStaysBelowRho) {
  const auto r = estimate_best_constant(K::inner_euclidean, 3, 2, quick(5, 16));
  EXPECT_LE(r.best.ratio, rho() + 1e-6);
  EXPECT_GT(r.best.ratio, 0.6);
}

TEST(Search, WitnessMatchesRatio) {
  const auto r = estimate_best_constant(K::mst, 4, 2, quick(3, 8));
  EXPECT_NEAR(simplex_ratio(r.best.config, K::mst).ratio, r.best.ratio, 1e-12);
  EXPECT_LE(r.best.ratio, 0.5 + 1e-9);
}

TEST(Search, IndependentOfWorkerCount) {
  SearchOptions a = quick(9, 12);
  SearchOptions b = a;
  b.workers = 4;
  const auto ra = estimate_best_constant(K::inner_chebyshev, 3, 2, a);
  const auto rb = estimate_best_constant(K::inner_chebyshev, 3, 2, b);
  EXPECT_EQ(ra.best.ratio, rb.best.ratio);
  EXPECT_EQ(ra.best_restart, rb.best_restart);
  EXPECT_EQ(ra.evaluations, rb.evaluations);
  EXPECT_EQ(ra.best.config.points.points(), rb.best.config.points.points());
}

TEST(Search, RejectsBadOptions) {
  SearchOptions o;
  o.restarts = 0;
  EXPECT_THROW(estimate_best_constant(K::mst, 3, 2, o), UsageError);
  o.restarts = 1;
  o.iters = 0;
  EXPECT_THROW(estimate_best_constant(K::mst, 3, 2, o), UsageError);
  EXPECT_THROW(estimate_best_constant(K::steiner, 8, 2, SearchOptions{}), UnsupportedScaleError);
}
