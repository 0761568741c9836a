#include <gtest/gtest.h>

#include <cmath>

#include "ndist/inner_balls.hpp"
#include "ndist/trees.hpp"
#include "test_support.hpp"

using namespace ndist;

namespace {

// No input point strictly inside the cube, and x_i, x_j on opposite faces.
bool cube_admissible(const PointSet& ps, std::size_t i, std::size_t j, const Ball& b) {
  const double h = b.radius;
  bool opposite = false;
  for (std::size_t k = 0; k < ps.dim(); ++k) {
    const double di = ps[i][k] - b.center[k], dj = ps[j][k] - b.center[k];
    if (std::abs(std::abs(di) - h) < 1e-12 && std::abs(di + dj) < 1e-12) opposite = true;
  }
  if (!opposite) return false;
  for (std::size_t m : {i, j}) {
    if (distance(ps[m], b.center, Norm::chebyshev) > h * (1 + 1e-12)) return false;
  }
  return true;
}

bool strictly_inside_cube(const Point& p, const Point& c, double half) {
  return distance(p, c, Norm::chebyshev) < half - 1e-9 * 2 * half;
}

}  // namespace

TEST(InnerEuclidean, FigureTwoExample) {
  const PointSet ps{Point{0.7, 2.3}, Point{1, 0.5}, Point{2.5, 2}, Point{3.5, 2}, Point{5, 1}};
  const auto r = inner_euclidean_ball_distance(ps);
  EXPECT_NEAR(r.value, 1.5 * std::sqrt(2.0), 1e-12);
  ASSERT_TRUE(r.witness_pair);
  EXPECT_EQ(*r.witness_pair, (std::pair<std::size_t, std::size_t>{1, 2}));
  ASSERT_TRUE(r.ball);
  EXPECT_NEAR(r.ball->radius, 0.75 * std::sqrt(2.0), 1e-12);
}

TEST(InnerEuclidean, CoincidentPointsGiveZero) {
  const auto r = inner_euclidean_ball_distance(PointSet{Point{1, 2}, Point{1, 2}, Point{1, 2}});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_FALSE(r.witness_pair);
}

TEST(InnerEuclidean, CollinearMiddlePointBlocks) {
  const PointSet ps{Point{-1, 0}, Point{1, 0}, Point{0, 0}};
  const auto r = inner_euclidean_ball_distance(ps);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_FALSE(is_inner_ball_diameter(ps, 0, 1));
  EXPECT_TRUE(is_inner_ball_diameter(ps, 0, 2));
}

TEST(InnerEuclidean, ThreePointClosedFormExamples) {
  const double h = std::sqrt(3.0) / 2;
  EXPECT_NEAR(inner_euclidean_ball_distance_3(Point{0, 0}, Point{1, 0}, Point{0.5, h}), 1.0, 1e-15);
  EXPECT_NEAR(inner_euclidean_ball_distance_3(Point{0, 0}, Point{4, 0}, Point{1, 1}),
              std::sqrt(10.0), 1e-15);
  const double s = std::sqrt(2.0) / 2;
  EXPECT_NEAR(inner_euclidean_ball_distance_3(Point{-1, 0}, Point{1, 0}, Point{s, s}), 2.0, 1e-15);
  EXPECT_NEAR(inner_euclidean_ball_distance_3(Point{0, 0}, Point{0, 0}, Point{3, 4}), 5.0, 1e-15);
  EXPECT_NEAR(inner_euclidean_ball_distance_3(Point{0, 0}, Point{1, 0}, Point{3, 0}), 2.0, 1e-15);
}

TEST(InnerEuclidean, MatchesThreePointClosedForm) {
  SplitMix64 rng(21);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t q = 2 + t % 2;
    const PointSet ps = tu::random_set(3, q, rng);
    EXPECT_NEAR(inner_euclidean_ball_distance(ps).value,
                inner_euclidean_ball_distance_3(ps[0], ps[1], ps[2]), 1e-12);
  }
}

TEST(InnerEuclidean, MstEdgesAreInnerDiameters) {
  SplitMix64 rng(22);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng.below(7), q = 2 + rng.below(2);
    const PointSet ps = tu::random_set(n, q, rng);
    const Tree mst = mst_distance(ps);
    double longest = 0.0;
    for (const auto& [u, v] : mst.edges) {
      EXPECT_TRUE(is_inner_ball_diameter(ps, u, v));
      longest = std::max(longest, distance(ps[u], ps[v]));
    }
    EXPECT_GE(inner_euclidean_ball_distance(ps).value, longest);
  }
}

TEST(InnerChebyshev, FigureOneExample) {
  const PointSet ps{Point{0.5, 2}, Point{1.5, 3}, Point{3.5, 2.5}, Point{2, 1.6}, Point{4.5, 1}};
  const auto r = inner_chebyshev_ball_distance(ps);
  EXPECT_DOUBLE_EQ(r.value, 2.5);
  ASSERT_TRUE(r.witness_pair);
  EXPECT_EQ(*r.witness_pair, (std::pair<std::size_t, std::size_t>{3, 4}));
  ASSERT_TRUE(r.ball);
  EXPECT_TRUE(cube_admissible(ps, 3, 4, *r.ball));
  for (const Point& p : ps) EXPECT_FALSE(strictly_inside_cube(p, r.ball->center, 1.25));
  // The drawn square [2, 4.5] x [0, 2.5] is admissible as well.
  EXPECT_TRUE(cube_admissible(ps, 3, 4, Ball(Point{3.25, 1.25}, 1.25, Norm::chebyshev)));
  // Reported center is the lexicographically smallest grid vertex.
  EXPECT_DOUBLE_EQ(r.ball->center[0], 3.25);
  EXPECT_NEAR(r.ball->center[1], 0.35, 1e-15);
}

TEST(InnerChebyshev, TwoPointsGiveChebyshevDistance) {
  EXPECT_DOUBLE_EQ(inner_chebyshev_ball_distance(PointSet{Point{0, 0}, Point{1, 0}}).value, 1.0);
  SplitMix64 rng(23);
  for (int t = 0; t < 1000; ++t) {
    const PointSet ps = tu::random_set(2, 2 + t % 3, rng);
    EXPECT_EQ(inner_chebyshev_ball_distance(ps).value, distance(ps[0], ps[1], Norm::chebyshev));
  }
}

TEST(InnerChebyshev, AxisAlignedMidpointDoesNotBlock) {
  // The cube [0,1] x [0,1] keeps (1/2, 0) on its boundary.
  const PointSet ps{Point{0, 0}, Point{1, 0}, Point{1, 0}};
  EXPECT_DOUBLE_EQ(inner_chebyshev_ball_distance(ps).value, 1.0);
  EXPECT_DOUBLE_EQ(inner_chebyshev_ball_distance(ps.replaced(2, Point{0.5, 0})).value, 1.0);
}

TEST(InnerChebyshev, DiagonalMidpointBlocks) {
  const PointSet ps{Point{0, 0}, Point{1, 1}, Point{1, 1}};
  EXPECT_DOUBLE_EQ(inner_chebyshev_ball_distance(ps).value, 1.0);
  EXPECT_DOUBLE_EQ(inner_chebyshev_ball_distance(ps.replaced(2, Point{0.5, 0.5})).value, 0.5);
}

TEST(InnerChebyshev, RejectsLine) {
  EXPECT_THROW(inner_chebyshev_ball_distance(PointSet{Point{0.0}, Point{1.0}}), UsageError);
}

TEST(InnerChebyshev, WitnessCubeIsAdmissibleAndNoLongerCubeFound) {
  SplitMix64 rng(24);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 3 + rng.below(4);
    const PointSet ps = tu::random_set(n, 2, rng);
    const auto r = inner_chebyshev_ball_distance(ps);
    ASSERT_TRUE(r.ball);
    EXPECT_TRUE(cube_admissible(ps, r.witness_pair->first, r.witness_pair->second, *r.ball));
    for (const Point& p : ps) EXPECT_FALSE(strictly_inside_cube(p, r.ball->center, r.ball->radius));
    // Sampled search over longer pairs: no admissible placement may exist.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double len = distance(ps[i], ps[j], Norm::chebyshev);
        if (len <= r.value * (1 + 1e-9)) continue;
        const std::size_t k = std::abs(ps[i][0] - ps[j][0]) == len ? 0 : 1;
        const std::size_t f = 1 - k;
        const double lo = std::max(ps[i][f], ps[j][f]) - len / 2;
        const double hi = std::min(ps[i][f], ps[j][f]) + len / 2;
        for (int s = 0; s <= 400; ++s) {
          Point c = Point::zeros(2);
          c[k] = (ps[i][k] + ps[j][k]) / 2;
          c[f] = lo + (hi - lo) * s / 400.0;
          bool blocked = false;
          for (const Point& p : ps) blocked = blocked || strictly_inside_cube(p, c, len / 2);
          EXPECT_TRUE(blocked) << "longer admissible cube missed";
        }
      }
    }
  }
}

TEST(InnerBalls, ClosestPairLowerBound) {
  SplitMix64 rng(25);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng.below(6), q = 2 + rng.below(2);
    const PointSet ps = tu::random_set(n, q, rng);
    double closest2 = INFINITY, closest_inf = INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        closest2 = std::min(closest2, distance(ps[i], ps[j]));
        closest_inf = std::min(closest_inf, distance(ps[i], ps[j], Norm::chebyshev));
      }
    }
    EXPECT_GE(inner_euclidean_ball_distance(ps).value, closest2);
    EXPECT_GE(inner_chebyshev_ball_distance(ps).value, closest_inf);
    EXPECT_GT(inner_chebyshev_ball_distance(ps).value, 0.0);
  }
}

TEST(InnerBalls, PermutationInvariant) {
  SplitMix64 rng(26);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + rng.below(5), q = 2 + rng.below(2);
    PointSet ps = tu::random_set(n, q, rng);
    if (t % 3 == 0) ps = ps.replaced(0, ps[1]);
    const PointSet pp = tu::permuted(ps, rng);
    EXPECT_EQ(inner_euclidean_ball_distance(ps).value, inner_euclidean_ball_distance(pp).value);
    EXPECT_EQ(inner_chebyshev_ball_distance(ps).value, inner_chebyshev_ball_distance(pp).value);
  }
}
