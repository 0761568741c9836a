#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ndist/constructions.hpp"
#include "ndist/errors.hpp"
#include "ndist/kinds.hpp"
#include "ndist/parallel.hpp"
#include "ndist/random.hpp"
#include "ndist/simplex.hpp"

namespace ndist {

struct SearchOptions {
  std::size_t restarts = 64;
  std::size_t iters = 200;  // poll sweeps per restart
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  double initial_step = 0.25;
  double min_step = 1e-7;
};

struct BestConstantReport {
  DistanceKind kind = DistanceKind::cardinality;
  std::size_t n = 0, q = 0;
  SearchOptions options;
  RatioWitness best;
  std::size_t best_restart = 0;
  /// Construction the best restart started from, if any.
  std::optional<Construction> best_start;
  std::size_t iterations = 0;   // poll sweeps over all restarts
  std::size_t evaluations = 0;  // ratio evaluations over all restarts
  ProvenBounds bounds;
};

namespace detail {

/// Flat coordinates: x_1..x_n then z, q values each.
inline std::vector<double> flatten(const Configuration& c) {
  std::vector<double> v;
  for (const Point& p : c.points) v.insert(v.end(), p.coords().begin(), p.coords().end());
  v.insert(v.end(), c.z.coords().begin(), c.z.coords().end());
  return v;
}

inline Configuration unflatten(const std::vector<double>& v, std::size_t n, std::size_t q) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.emplace_back(std::vector<double>(v.begin() + i * q, v.begin() + (i + 1) * q));
  }
  Point z(std::vector<double>(v.begin() + n * q, v.end()));
  return {PointSet(std::move(pts)), std::move(z)};
}

/// Centroid of x_1..x_n to the origin, largest pairwise distance to 1.
/// Returns false when all points coincide.
inline bool normalize(std::vector<double>& v, std::size_t n, std::size_t q) {
  std::vector<double> centroid(q, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < q; ++k) centroid[k] += v[i * q + k] / static_cast<double>(n);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k < q; ++k) v[i * q + k] -= centroid[k];
  }
  double diam = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < q; ++k) {
        const double d = v[i * q + k] - v[j * q + k];
        s += d * d;
      }
      diam = std::max(diam, s);
    }
  }
  if (diam == 0.0) return false;
  const double inv = 1.0 / std::sqrt(diam);
  for (double& x : v) x *= inv;
  return true;
}

struct RestartResult {
  std::vector<double> x;
  double value = -std::numeric_limits<double>::infinity();
  std::size_t sweeps = 0;
  std::size_t evaluations = 0;
};

/// Compass search maximizing the simplex ratio from `start`.
inline RestartResult pattern_search(DistanceKind kind, std::size_t n, std::size_t q,
                                    std::vector<double> start, const SearchOptions& opt) {
  RestartResult r;
  auto value_of = [&](std::vector<double>& x) {
    ++r.evaluations;
    if (!normalize(x, n, q)) return -std::numeric_limits<double>::infinity();
    return checked_ratio(unflatten(x, n, q), kind);
  };
  r.x = std::move(start);
  r.value = value_of(r.x);
  double step = opt.initial_step;
  while (r.sweeps < opt.iters && step >= opt.min_step) {
    ++r.sweeps;
    bool improved = false;
    for (std::size_t c = 0; c < r.x.size(); ++c) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> trial = r.x;
        trial[c] += sign * step;
        const double v = value_of(trial);
        if (v > r.value) {
          r.value = v;
          r.x = std::move(trial);
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return r;
}

}  // namespace detail

/// Multistart derivative-free maximization of the simplex ratio. The first
/// restarts begin at every construction compatible with (n, q), the rest at
/// uniform random configurations drawn from per-restart substreams.
inline BestConstantReport estimate_best_constant(DistanceKind kind, std::size_t n, std::size_t q,
                                                 const SearchOptions& opt) {
  if (opt.restarts < 1 || opt.iters < 1) throw UsageError("restarts and iters must be >= 1");
  check_applicable(kind, n, q);
  const std::vector<Construction> seeds = compatible_constructions(n, q);

  std::vector<detail::RestartResult> results(opt.restarts);
  parallel_for(opt.restarts, opt.workers, [&](std::size_t i) {
    Configuration start;
    if (i < seeds.size()) {
      start = construct(seeds[i], n, q);
    } else {
      SplitMix64 rng = substream(opt.seed, i);
      start = sample_configuration(n, q, Sampler::uniform, rng);
    }
    results[i] = detail::pattern_search(kind, n, q, detail::flatten(start), opt);
  });

  BestConstantReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.q = q;
  rep.options = opt;
  rep.bounds = proven_bounds(kind, n, q);
  for (std::size_t i = 0; i < results.size(); ++i) {
    rep.iterations += results[i].sweeps;
    rep.evaluations += results[i].evaluations;
    if (results[i].value > results[rep.best_restart].value) rep.best_restart = i;
  }
  if (rep.best_restart < seeds.size()) rep.best_start = seeds[rep.best_restart];
  rep.best = violation_witness(detail::unflatten(results[rep.best_restart].x, n, q), kind);
  return rep;
}

}  // namespace ndist
