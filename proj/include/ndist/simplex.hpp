#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndist/errors.hpp"
#include "ndist/geometry.hpp"
#include "ndist/kinds.hpp"
#include "ndist/parallel.hpp"
#include "ndist/random.hpp"

namespace ndist {

/// Points x_1..x_n together with the replacement point z.
struct Configuration {
  PointSet points;
  Point z;
};

struct RatioWitness {
  Configuration config;
  DistanceKind kind = DistanceKind::cardinality;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  /// d(x_1..x_n) with the i-th point replaced by z, for each i.
  std::vector<double> terms;
};

inline void check_configuration(const Configuration& c, DistanceKind kind) {
  c.points[0].check_same_dim(c.z);
  check_applicable(kind, c.points.size(), c.points.dim());
}

inline std::vector<double> simplex_terms(const Configuration& c, DistanceKind kind) {
  check_configuration(c, kind);
  std::vector<double> terms;
  terms.reserve(c.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    terms.push_back(evaluate(kind, c.points.replaced(i, c.z)));
  }
  return terms;
}

inline double simplex_sum(const Configuration& c, DistanceKind kind) {
  double s = 0.0;
  for (double t : simplex_terms(c, kind)) s += t;
  return s;
}

/// d(x_1..x_n) / sum_i d(..)_i^z. Throws UsageError when all points coincide
/// and DistanceViolation when the sum vanishes under a positive numerator.
inline RatioWitness simplex_ratio(const Configuration& c, DistanceKind kind) {
  check_configuration(c, kind);
  if (c.points.all_coincident()) {
    throw UsageError("simplex ratio is undefined when all points coincide");
  }
  RatioWitness w;
  w.config = c;
  w.kind = kind;
  w.numerator = evaluate(kind, c.points);
  w.terms = simplex_terms(c, kind);
  for (double t : w.terms) w.denominator += t;
  if (w.denominator == 0.0) {
    throw DistanceViolation(std::string(to_string(kind)) +
                            ": simplex sum is zero while the distance is positive");
  }
  w.ratio = w.numerator / w.denominator;
  return w;
}

// ---------------------------------------------------------------------------
// Random configurations
// ---------------------------------------------------------------------------

enum class Sampler { uniform, collapse };

inline std::string_view to_string(Sampler s) {
  return s == Sampler::uniform ? "uniform" : "collapse";
}

inline Sampler parse_sampler(std::string_view name) {
  if (name == "uniform") return Sampler::uniform;
  if (name == "collapse") return Sampler::collapse;
  throw UsageError("unknown sampler '" + std::string(name) + "'");
}

inline Point random_point(std::size_t q, SplitMix64& rng) {
  std::vector<double> c(q);
  for (double& v : c) v = rng.uniform();
  return Point(std::move(c));
}

/// Points i.i.d. uniform on [0,1]^q. The collapse sampler additionally, each
/// with probability 1/2, copies one point onto a random subset of the others
/// and sets z to the midpoint of a random pair. Redraws until at least two
/// points differ.
inline Configuration sample_configuration(std::size_t n, std::size_t q, Sampler sampler,
                                          SplitMix64& rng) {
  while (true) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(q, rng));
    Point z = random_point(q, rng);
    if (sampler == Sampler::collapse) {
      if (rng.uniform() < 0.5) {
        const std::size_t src = rng.below(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (i != src && rng.uniform() < 0.5) pts[i] = pts[src];
        }
      }
      if (rng.uniform() < 0.5) {
        const std::size_t a = rng.below(n);
        const std::size_t b = (a + 1 + rng.below(n - 1)) % n;
        z = midpoint(pts[a], pts[b]);
      }
    }
    PointSet ps(std::move(pts));
    if (!ps.all_coincident()) return {std::move(ps), std::move(z)};
  }
}

// ---------------------------------------------------------------------------
// Randomized simplex-inequality check
// ---------------------------------------------------------------------------

/// A ratio above 1 + kViolationTol falsifies the simplex inequality.
inline constexpr double kViolationTol = 1e-9;
/// Slack allowed above a proven best constant.
inline constexpr double kBoundTol = 1e-6;

/// Whether `ratio` is inconsistent with the proven upper bound. Integer-valued
/// distances are compared exactly against strict bounds.
inline bool exceeds_bound(DistanceKind kind, double ratio, const ProvenBounds& b) {
  if (!b.upper) return false;
  const bool exact_arith = kind == DistanceKind::cardinality || kind == DistanceKind::lines;
  if (exact_arith && b.upper_strict) return ratio > *b.upper - 1e-12;
  return ratio > *b.upper + kBoundTol;
}

struct CheckOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  Sampler sampler = Sampler::uniform;
  std::size_t workers = 1;
};

struct CheckReport {
  DistanceKind kind = DistanceKind::cardinality;
  std::size_t n = 0, q = 0;
  CheckOptions options;
  ProvenBounds bounds;
  double max_ratio = 0.0;
  std::size_t max_trial = 0;
  std::optional<RatioWitness> witness;
  std::size_t violations = 0;
  std::size_t bound_exceedances = 0;
  /// Up to five violating witnesses, lowest trial index first.
  std::vector<RatioWitness> violation_examples;
};

inline Configuration check_trial_configuration(std::size_t n, std::size_t q,
                                               const CheckOptions& opt, std::size_t trial) {
  SplitMix64 rng = substream(opt.seed, trial);
  return sample_configuration(n, q, opt.sampler, rng);
}

/// Ratio of one configuration; +inf for a vanishing simplex sum.
inline double checked_ratio(const Configuration& c, DistanceKind kind) {
  try {
    return simplex_ratio(c, kind).ratio;
  } catch (const DistanceViolation&) {
    return std::numeric_limits<double>::infinity();
  }
}

inline RatioWitness violation_witness(const Configuration& c, DistanceKind kind) {
  try {
    return simplex_ratio(c, kind);
  } catch (const DistanceViolation&) {
    RatioWitness w;
    w.config = c;
    w.kind = kind;
    w.numerator = evaluate(kind, c.points);
    w.terms = simplex_terms(c, kind);
    w.ratio = std::numeric_limits<double>::infinity();
    return w;
  }
}

/// Evaluates `trials` seeded random configurations. Trial i draws from its own
/// substream, so the report does not depend on the worker count.
inline CheckReport check_simplex_inequality(DistanceKind kind, std::size_t n, std::size_t q,
                                            const CheckOptions& opt) {
  if (opt.trials < 1) throw UsageError("trials must be at least 1");
  check_applicable(kind, n, q);
  CheckReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.q = q;
  rep.options = opt;
  rep.bounds = proven_bounds(kind, n, q);

  std::vector<double> ratios(opt.trials);
  parallel_for(opt.trials, opt.workers, [&](std::size_t t) {
    ratios[t] = checked_ratio(check_trial_configuration(n, q, opt, t), kind);
  });

  rep.max_ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < ratios.size(); ++t) {
    if (ratios[t] > rep.max_ratio) {
      rep.max_ratio = ratios[t];
      rep.max_trial = t;
    }
    if (ratios[t] > 1.0 + kViolationTol) {
      ++rep.violations;
      if (rep.violation_examples.size() < 5) {
        rep.violation_examples.push_back(
            violation_witness(check_trial_configuration(n, q, opt, t), kind));
      }
    }
    if (exceeds_bound(kind, ratios[t], rep.bounds)) ++rep.bound_exceedances;
  }
  rep.witness = violation_witness(check_trial_configuration(n, q, opt, rep.max_trial), kind);
  return rep;
}

}  // namespace ndist
