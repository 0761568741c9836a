#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <optional>

#include "ndist/classic.hpp"
#include "ndist/enclosing_ball.hpp"
#include "ndist/kinds.hpp"
#include "test_support.hpp"

using namespace ndist;

namespace {

struct Sphere {
  std::vector<double> c;
  double r;
};

// Circumsphere of 2, 3 or 4 points of R^3 (or R^2 padded with z = 0), with the
// center in their affine hull. Cramer's rule on the Gram system.
std::optional<Sphere> circumsphere(const std::vector<std::array<double, 3>>& p) {
  const std::size_t k = p.size() - 1;
  std::array<std::array<double, 3>, 3> v{};
  for (std::size_t i = 0; i < k; ++i)
    for (int d = 0; d < 3; ++d) v[i][d] = p[i + 1][d] - p[0][d];
  double g[3][3] = {}, rhs[3] = {};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = v[i][0] * v[j][0] + v[i][1] * v[j][1] + v[i][2] * v[j][2];
    rhs[i] = g[i][i] / 2;
  }
  auto det = [&](double m[3][3]) {
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const double d0 = det(g);
  if (std::abs(d0) < 1e-14) return std::nullopt;
  double coef[3] = {};
  for (std::size_t c = 0; c < k; ++c) {
    double m[3][3];
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = (j == c) ? rhs[i] : g[i][j];
    coef[c] = det(m) / d0;
  }
  Sphere s{{p[0][0], p[0][1], p[0][2]}, 0.0};
  for (std::size_t i = 0; i < k; ++i)
    for (int d = 0; d < 3; ++d) s.c[d] += coef[i] * v[i][d];
  s.r = std::sqrt(std::pow(s.c[0] - p[0][0], 2) + std::pow(s.c[1] - p[0][1], 2) +
                  std::pow(s.c[2] - p[0][2], 2));
  return s;
}

// Smallest ball over all spheres through 2..4 input points that contain every point.
double brute_force_radius(const PointSet& ps) {
  std::vector<std::array<double, 3>> p;
  for (const Point& x : ps) p.push_back({x[0], x[1], ps.dim() == 3 ? x[2] : 0.0});
  const std::size_t n = p.size();
  double best = INFINITY;
  auto consider = [&](std::vector<std::array<double, 3>> sub) {
    const auto s = circumsphere(sub);
    if (!s) return;
    for (const auto& x : p) {
      const double d = std::sqrt(std::pow(x[0] - s->c[0], 2) + std::pow(x[1] - s->c[1], 2) +
                                 std::pow(x[2] - s->c[2], 2));
      if (d > s->r * (1 + 1e-12) + 1e-15) return;
    }
    best = std::min(best, s->r);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      consider({p[a], p[b]});
      for (std::size_t c = b + 1; c < n; ++c) {
        consider({p[a], p[b], p[c]});
        if (ps.dim() == 3)
          for (std::size_t d = c + 1; d < n; ++d) consider({p[a], p[b], p[c], p[d]});
      }
    }
  return best;
}

}  // namespace

TEST(Cardinality, Examples) {
  const Point a{0, 0}, b{1, 2};
  EXPECT_EQ(cardinality_distance(PointSet{a, a, a}), 0.0);
  EXPECT_EQ(cardinality_distance(PointSet{a, b, a}), 1.0);
  EXPECT_EQ(cardinality_distance(PointSet{a, b, Point{3, 3}, Point{4, 0}}), 3.0);
}

TEST(MaxGap, Examples) {
  const std::vector<double> xs = {1, 2, 5, 7};
  EXPECT_EQ(max_gap_distance(xs), 3.0);
  const std::vector<double> same = {4, 4, 4};
  EXPECT_EQ(max_gap_distance(same), 0.0);
  EXPECT_EQ(max_gap_distance(PointSet{Point{7.0}, Point{1.0}, Point{5.0}, Point{2.0}}), 3.0);
}

TEST(MaxGap, RequiresLine) {
  EXPECT_THROW(max_gap_distance(PointSet{Point{0, 0}, Point{1, 1}}), UsageError);
  const std::vector<double> one = {1};
  EXPECT_THROW(max_gap_distance(one), UsageError);
}

TEST(Lines, Examples) {
  EXPECT_EQ(line_count_distance(PointSet{Point{0, 0}, Point{1, 0}, Point{0, 1}}), 3.0);
  EXPECT_EQ(line_count_distance(PointSet{Point{0, 0}, Point{1, 0}, Point{2, 0}}), 1.0);
  std::vector<Point> circle;
  for (int k = 0; k < 5; ++k) {
    const double t = 2 * std::numbers::pi * k / 5;
    circle.push_back(Point{std::cos(t), std::sin(t)});
  }
  EXPECT_EQ(line_count_distance(PointSet(circle)), 10.0);
  EXPECT_EQ(line_count_distance(PointSet{Point{0, 0}, Point{0, 0}, Point{1, 1}}), 1.0);
  EXPECT_EQ(line_count_distance(PointSet{Point{2, 2}, Point{2, 2}}), 0.0);
}

TEST(Lines, CollinearQuadrupleAndVerticalLines) {
  // Four points on x = 1 plus one off the line: 1 + 4 lines.
  const PointSet ps{Point{1, 0}, Point{1, 1}, Point{1, 2}, Point{1, 5}, Point{3, 0}};
  EXPECT_EQ(line_count_distance(ps), 5.0);
  EXPECT_EQ(line_count_distance(PointSet{Point{0, 0, 0}, Point{1, 1, 1}, Point{2, 2, 2}}), 1.0);
}

TEST(Lines, RequiresPlane) {
  EXPECT_THROW(line_count_distance(PointSet{Point{0.0}, Point{1.0}}), UsageError);
}

TEST(EnclosingBall, Examples) {
  const auto two = enclosing_ball(PointSet{Point{0, 0}, Point{2, 0}});
  ASSERT_TRUE(two);
  EXPECT_EQ(two->ball.center, (Point{1, 0}));
  EXPECT_DOUBLE_EQ(two->ball.radius, 1.0);

  const auto right = enclosing_ball(PointSet{Point{0, 0}, Point{2, 0}, Point{1, 1}});
  ASSERT_TRUE(right);
  EXPECT_NEAR(right->ball.center[0], 1.0, 1e-12);
  EXPECT_NEAR(right->ball.center[1], 0.0, 1e-12);
  EXPECT_NEAR(right->ball.radius, 1.0, 1e-12);

  const double h = std::sqrt(3.0) / 2;
  const PointSet eq{Point{0, 0}, Point{1, 0}, Point{0.5, h}};
  EXPECT_NEAR(enclosing_ball(eq)->ball.radius, 1 / std::sqrt(3.0), 1e-12);
  EXPECT_EQ(enclosing_ball(eq)->support.size(), 3u);
  EXPECT_NEAR(enclosing_ball_volume_distance(eq), std::numbers::pi / 3, 1e-12);
}

TEST(EnclosingBall, DiameterAndArea) {
  const PointSet sq{Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
  EXPECT_NEAR(enclosing_ball_diameter_distance(sq), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(enclosing_ball_diameter_distance(PointSet{Point{0, 0}, Point{3, 4}}), 5.0, 1e-12);
  EXPECT_NEAR(enclosing_ball_volume_distance(PointSet{Point{0, 0}, Point{2, 0}}), std::numbers::pi,
              1e-12);
  EXPECT_EQ(enclosing_ball_diameter_distance(PointSet{Point{1, 1}, Point{1, 1}}), 0.0);
  EXPECT_FALSE(enclosing_ball(PointSet{Point{1, 1}, Point{1, 1}}));
}

TEST(EnclosingBall, UnsupportedDimensions) {
  EXPECT_THROW(enclosing_ball(PointSet{Point{0.0}, Point{1.0}}), UnsupportedScaleError);
  EXPECT_THROW(enclosing_ball(PointSet{Point{0, 0, 0, 0}, Point{1, 0, 0, 0}}), UnsupportedScaleError);
  EXPECT_THROW(enclosing_ball_volume_distance(PointSet{Point{0, 0, 0}, Point{1, 0, 0}}),
               UnsupportedScaleError);
}

TEST(EnclosingBall, MatchesBruteForce) {
  SplitMix64 rng(51);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t q = 2 + t % 2, n = 2 + rng.below(7);
    PointSet ps = tu::random_set(n, q, rng);
    if (t % 5 == 0) ps = ps.replaced(0, ps[n - 1]);
    if (ps.all_coincident()) continue;
    const auto b = enclosing_ball(ps);
    ASSERT_TRUE(b);
    EXPECT_NEAR(b->ball.radius, brute_force_radius(ps), 1e-9);
  }
}

TEST(EnclosingBall, SupportOnBoundaryAndSufficient) {
  SplitMix64 rng(52);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t q = 2 + t % 2, n = 3 + rng.below(6);
    const PointSet ps = tu::random_set(n, q, rng);
    const auto b = enclosing_ball(ps);
    ASSERT_TRUE(b);
    EXPECT_GE(b->support.size(), 2u);
    EXPECT_LE(b->support.size(), q + 1);
    for (const Point& p : ps) EXPECT_LE(distance(p, b->ball.center), b->ball.radius * (1 + 1e-9));
    std::vector<Point> sup;
    for (std::size_t i : b->support) {
      EXPECT_NEAR(distance(ps[i], b->ball.center), b->ball.radius, 1e-9 * b->ball.radius);
      sup.push_back(ps[i]);
    }
    const auto only = enclosing_ball(PointSet(sup));
    EXPECT_NEAR(only->ball.radius, b->ball.radius, 1e-9 * b->ball.radius);
  }
}

TEST(EnclosingBall, Deterministic) {
  SplitMix64 rng(53);
  const PointSet ps = tu::random_set(8, 3, rng);
  const auto a = enclosing_ball(ps), b = enclosing_ball(ps);
  EXPECT_EQ(a->ball.center, b->ball.center);
  EXPECT_EQ(a->ball.radius, b->ball.radius);
  EXPECT_EQ(a->support, b->support);
}

TEST(AllDistances, VanishExactlyOnCoincidentPoints) {
  for (DistanceKind k : kAllKinds) {
    for (std::size_t q : {1u, 2u, 3u}) {
      for (std::size_t n : {2u, 3u, 5u}) {
        try {
          check_applicable(k, n, q);
        } catch (const std::exception&) {
          continue;
        }
        Point p = Point::zeros(q);
        p[0] = 0.25;
        const PointSet ps(std::vector<Point>(n, p));
        EXPECT_EQ(evaluate(k, ps), 0.0) << to_string(k);
      }
    }
  }
}

TEST(AllDistances, PositiveOnDistinctAndPermutationInvariant) {
  SplitMix64 rng(54);
  for (DistanceKind k : kAllKinds) {
    const std::size_t q = k == DistanceKind::max_gap ? 1 : 2;
    for (int t = 0; t < 100; ++t) {
      const PointSet ps = tu::random_set(3 + rng.below(3), q, rng);
      const double v = evaluate(k, ps);
      EXPECT_GT(v, 0.0) << to_string(k);
      EXPECT_NEAR(evaluate(k, tu::permuted(ps, rng)), v, 1e-9 * std::max(1.0, v))
          << to_string(k);
    }
  }
}
