#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ndist/constructions.hpp"
#include "ndist/errors.hpp"
#include "ndist/io.hpp"
#include "ndist/kinds.hpp"
#include "ndist/reproduce.hpp"
#include "ndist/search.hpp"
#include "ndist/simplex.hpp"

namespace ndist {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

namespace report {

using nlohmann::json;

inline json real_or_null(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

inline json points_json(const PointSet& ps) {
  json a = json::array();
  for (const Point& p : ps) a.push_back(to_json(p));
  return a;
}

inline json bounds_json(const ProvenBounds& b) {
  return {{"lower", real_or_null(b.lower)},
          {"upper", real_or_null(b.upper)},
          {"upper_strict", b.upper_strict},
          {"exact", b.exact()}};
}

inline json witness_json(const RatioWitness& w) {
  return {{"kind", to_string(w.kind)},
          {"n", w.config.points.size()},
          {"q", w.config.points.dim()},
          {"numerator", w.numerator},
          {"denominator", w.denominator},
          {"ratio", std::isfinite(w.ratio) ? json(w.ratio) : json("inf")},
          {"terms", w.terms},
          {"points", points_json(w.config.points)},
          {"z", to_json(w.config.z)}};
}

inline json inner_ball_json(const InnerBallResult& r) {
  if (!r.witness_pair) return nullptr;
  json j = {{"pair", {r.witness_pair->first, r.witness_pair->second}}};
  if (r.ball) {
    j["center"] = to_json(r.ball->center);
    j["radius"] = r.ball->radius;
  }
  return j;
}

inline json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& [u, v] : edges) a.push_back({u, v});
  return a;
}

/// Evaluates `kind` on `ps` and returns {value, witness}.
inline std::pair<double, json> evaluate_with_witness(DistanceKind kind, const PointSet& ps) {
  switch (kind) {
    case DistanceKind::inner_chebyshev: {
      const auto r = inner_chebyshev_ball_distance(ps);
      return {r.value, inner_ball_json(r)};
    }
    case DistanceKind::inner_euclidean: {
      const auto r = inner_euclidean_ball_distance(ps);
      return {r.value, inner_ball_json(r)};
    }
    case DistanceKind::mst: {
      const auto t = mst_distance(ps);
      return {t.total_length, json{{"edges", edges_json(t.edges)}}};
    }
    case DistanceKind::steiner: {
      const auto r = steiner_distance(ps);
      json sp = json::array();
      for (const Point& p : r.steiner_points) sp.push_back(to_json(p));
      json verts = json::array();
      for (const Point& p : r.tree.vertices) verts.push_back(to_json(p));
      return {r.length, json{{"topology", r.topology_id},
                             {"steiner_points", sp},
                             {"vertices", verts},
                             {"edges", edges_json(r.tree.edges)}}};
    }
    case DistanceKind::enclosing_diameter:
    case DistanceKind::enclosing_area: {
      const double v = evaluate(kind, ps);
      const auto b = enclosing_ball(ps);
      if (!b) return {v, nullptr};
      return {v, json{{"center", to_json(b->ball.center)},
                      {"radius", b->ball.radius},
                      {"support", b->support}}};
    }
    default:
      return {evaluate(kind, ps), nullptr};
  }
}

}  // namespace report

namespace detail {

struct CliState {
  std::string kind;
  std::size_t n = 0, q = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 10000;
  std::size_t restarts = 64;
  std::size_t iters = 200;
  std::optional<double> epsilon;
  std::string input, output, format = "json";
  std::size_t workers = 1;
  std::string sampler = "uniform";
  std::string name;
  std::vector<double> z;
  std::string target;
};

inline std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += ',';
    out += f;
  }
  return out + '\n';
}

inline std::string opt_real(std::optional<double> v) { return v ? format_real(*v) : ""; }

inline PointFile load_input(const CliState& st) {
  PointFile f = read_points_file(st.input);
  if (f.points.size() < 2) throw UsageError("input needs at least two points");
  if (!st.z.empty()) f.z = Point(st.z);
  return f;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + '\n'; }

inline int cmd_eval(const CliState& st, std::string& out) {
  const DistanceKind kind = parse_kind(st.kind);
  const PointFile f = load_input(st);
  const PointSet ps(f.points);
  check_applicable(kind, ps.size(), ps.dim());
  const auto [value, witness] = report::evaluate_with_witness(kind, ps);
  if (st.format == "csv") {
    out = csv_row({"kind", "n", "q", "value"}) +
          csv_row({std::string(to_string(kind)), std::to_string(ps.size()),
                   std::to_string(ps.dim()), format_real(value)});
  } else {
    out = dump({{"kind", to_string(kind)},
                {"n", ps.size()},
                {"q", ps.dim()},
                {"value", value},
                {"witness", witness}});
  }
  return kExitOk;
}

inline int cmd_ratio(const CliState& st, std::string& out) {
  const DistanceKind kind = parse_kind(st.kind);
  const PointFile f = load_input(st);
  if (!f.z) throw UsageError("ratio needs z: a 'z' row in the input or --z");
  const RatioWitness w = violation_witness({PointSet(f.points), *f.z}, kind);
  if (st.format == "csv") {
    out = csv_row({"kind", "n", "q", "numerator", "denominator", "ratio"}) +
          csv_row({std::string(to_string(kind)), std::to_string(w.config.points.size()),
                   std::to_string(w.config.points.dim()), format_real(w.numerator),
                   format_real(w.denominator), format_real(w.ratio)});
  } else {
    out = dump(report::witness_json(w));
  }
  return w.ratio > 1.0 + kViolationTol ? kExitMismatch : kExitOk;
}

inline int cmd_check(const CliState& st, std::string& out) {
  const DistanceKind kind = parse_kind(st.kind);
  CheckOptions opt;
  opt.trials = st.trials;
  opt.seed = st.seed;
  opt.sampler = parse_sampler(st.sampler);
  opt.workers = st.workers;
  const CheckReport r = check_simplex_inequality(kind, st.n, st.q, opt);
  if (st.format == "csv") {
    out = csv_row({"kind", "n", "q", "sampler", "trials", "seed", "max_ratio", "max_trial",
                   "violations", "bound_exceedances", "lower", "upper"}) +
          csv_row({std::string(to_string(kind)), std::to_string(st.n), std::to_string(st.q),
                   st.sampler, std::to_string(st.trials), std::to_string(st.seed),
                   format_real(r.max_ratio), std::to_string(r.max_trial),
                   std::to_string(r.violations), std::to_string(r.bound_exceedances),
                   opt_real(r.bounds.lower), opt_real(r.bounds.upper)});
  } else {
    nlohmann::json examples = nlohmann::json::array();
    for (const auto& w : r.violation_examples) examples.push_back(report::witness_json(w));
    out = dump({{"kind", to_string(kind)},
                {"n", st.n},
                {"q", st.q},
                {"sampler", st.sampler},
                {"trials", st.trials},
                {"seed", st.seed},
                {"max_ratio", r.max_ratio},
                {"max_trial", r.max_trial},
                {"violations", r.violations},
                {"bound_exceedances", r.bound_exceedances},
                {"bounds", report::bounds_json(r.bounds)},
                {"witness", r.witness ? report::witness_json(*r.witness) : nullptr},
                {"violation_examples", examples}});
  }
  return r.violations > 0 ? kExitMismatch : kExitOk;
}

inline int cmd_kstar(const CliState& st, std::string& out) {
  const DistanceKind kind = parse_kind(st.kind);
  SearchOptions opt;
  opt.restarts = st.restarts;
  opt.iters = st.iters;
  opt.seed = st.seed;
  opt.workers = st.workers;
  const BestConstantReport r = estimate_best_constant(kind, st.n, st.q, opt);
  const std::string start = r.best_start ? std::string(to_string(*r.best_start)) : "random";
  if (st.format == "csv") {
    out = csv_row({"kind", "n", "q", "restarts", "iters", "seed", "best_ratio", "best_restart",
                   "best_start", "lower", "upper"}) +
          csv_row({std::string(to_string(kind)), std::to_string(st.n), std::to_string(st.q),
                   std::to_string(st.restarts), std::to_string(st.iters), std::to_string(st.seed),
                   format_real(r.best.ratio), std::to_string(r.best_restart), start,
                   opt_real(r.bounds.lower), opt_real(r.bounds.upper)});
  } else {
    out = dump({{"kind", to_string(kind)},
                {"n", st.n},
                {"q", st.q},
                {"restarts", st.restarts},
                {"iters", st.iters},
                {"seed", st.seed},
                {"best_ratio", r.best.ratio},
                {"best_restart", r.best_restart},
                {"best_start", start},
                {"iterations", r.iterations},
                {"evaluations", r.evaluations},
                {"bounds", report::bounds_json(r.bounds)},
                {"best", report::witness_json(r.best)}});
  }
  return kExitOk;
}

inline int cmd_construct(const CliState& st, std::string& out) {
  const Construction c = parse_construction(st.name);
  const Configuration cfg = construct(c, st.n, st.q, st.epsilon);
  std::optional<RatioWitness> w;
  if (!st.kind.empty()) w = violation_witness(cfg, parse_kind(st.kind));
  if (st.format == "csv") {
    out = write_points_csv({cfg.points.points(), cfg.z});
  } else {
    nlohmann::json j = {{"name", to_string(c)},
                        {"n", st.n},
                        {"q", st.q},
                        {"epsilon", report::real_or_null(st.epsilon)},
                        {"points", report::points_json(cfg.points)},
                        {"z", to_json(cfg.z)}};
    if (w) j["ratio"] = report::witness_json(*w);
    out = dump(j);
  }
  return kExitOk;
}

inline int cmd_reproduce(const CliState& st, std::string& out) {
  if (st.target == "table1") {
    const Table1 t = reproduce_table1();
    if (st.format == "csv") {
      out = csv_row({"n", "lambda", "bound", "reference", "ok"});
      for (const auto& r : t.rows) {
        out += csv_row({std::to_string(r.n), format_real(r.lambda), format_real(r.bound),
                        format_real(r.reference), r.ok ? "true" : "false"});
      }
    } else {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : t.rows) {
        rows.push_back({{"n", r.n},
                        {"lambda", r.lambda},
                        {"bound", r.bound},
                        {"reference", r.reference},
                        {"ok", r.ok}});
      }
      out = dump({{"rows", rows},
                  {"lambda4_error", t.lambda4_error},
                  {"lambda6_error", t.lambda6_error},
                  {"ok", t.ok()}});
    }
    return t.ok() ? kExitOk : kExitMismatch;
  }
  if (st.target == "constants") {
    const auto rows = reproduce_constants();
    bool all = true;
    for (const auto& r : rows) all = all && r.ok;
    if (st.format == "csv") {
      out = csv_row({"kind", "construction", "n", "q", "epsilon", "ratio", "target", "tolerance",
                     "relation", "ok"});
      for (const auto& r : rows) {
        out += csv_row({std::string(to_string(r.kind)), std::string(to_string(r.construction)),
                        std::to_string(r.n), std::to_string(r.q), opt_real(r.epsilon),
                        format_real(r.ratio), format_real(r.target), format_real(r.tolerance),
                        std::string(to_string(r.relation)), r.ok ? "true" : "false"});
      }
    } else {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& r : rows) {
        a.push_back({{"kind", to_string(r.kind)},
                     {"construction", to_string(r.construction)},
                     {"n", r.n},
                     {"q", r.q},
                     {"epsilon", report::real_or_null(r.epsilon)},
                     {"ratio", r.ratio},
                     {"target", r.target},
                     {"tolerance", r.tolerance},
                     {"relation", to_string(r.relation)},
                     {"ok", r.ok}});
      }
      out = dump({{"rows", a}, {"ok", all}});
    }
    return all ? kExitOk : kExitMismatch;
  }
  throw UsageError("unknown reproduce target '" + st.target + "' (table1 or constants)");
}

}  // namespace detail

/// Runs the `ndist` command line. `args` excludes the program name. Results go
/// to `out` (or --output), diagnostics to `err`. Returns 0 on success, 1 on a
/// mathematical mismatch or violation, 2 on usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::CliState st;
  CLI::App app{"n-distances in R^q: evaluation, simplex-inequality checks, best constants"};
  app.name("ndist");
  app.require_subcommand(1);

  auto add_kind = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--kind", st.kind, "distance kind");
    if (required) o->required();
  };
  auto add_shape = [&](CLI::App* c) {
    c->add_option("-n", st.n, "number of points")->required()->check(CLI::Range(2, 1000000));
    c->add_option("-q", st.q, "dimension")->required()->check(CLI::Range(1, 1000000));
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--output,-o", st.output, "output file (default: stdout)");
    c->add_option("--format", st.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_seed = [&](CLI::App* c) {
    c->add_option("--seed", st.seed, "64-bit seed (default: $NDIST_SEED or 0)")
        ->envname("NDIST_SEED");
    c->add_option("--workers", st.workers, "worker threads")->check(CLI::Range(1, 4096));
  };

  auto* eval = app.add_subcommand("eval", "evaluate a distance on a point file");
  add_kind(eval, true);
  eval->add_option("--input,-i", st.input, "CSV or JSON point file")->required();
  add_common(eval);

  auto* ratio = app.add_subcommand("ratio", "simplex ratio of a point file with z");
  add_kind(ratio, true);
  ratio->add_option("--input,-i", st.input, "CSV or JSON point file")->required();
  ratio->add_option("--z", st.z, "replacement point, comma separated")->delimiter(',');
  add_common(ratio);

  auto* check = app.add_subcommand("check", "randomized simplex-inequality check");
  add_kind(check, true);
  add_shape(check);
  check->add_option("--trials", st.trials, "random configurations")->check(CLI::Range(1, 1000000000));
  check->add_option("--sampler", st.sampler, "sampling measure")
      ->check(CLI::IsMember({"uniform", "collapse"}));
  add_seed(check);
  add_common(check);

  auto* kstar = app.add_subcommand("kstar", "estimate the best constant by pattern search");
  add_kind(kstar, true);
  add_shape(kstar);
  kstar->add_option("--restarts", st.restarts, "search restarts")->check(CLI::Range(1, 1000000));
  kstar->add_option("--iters", st.iters, "poll sweeps per restart")->check(CLI::Range(1, 100000000));
  add_seed(kstar);
  add_common(kstar);

  auto* cons = app.add_subcommand("construct", "emit an extremal configuration");
  cons->add_option("--name", st.name, "construction name")->required();
  add_shape(cons);
  cons->add_option("--epsilon", st.epsilon, "offset for non-attained suprema")
      ->check(CLI::NonNegativeNumber);
  add_kind(cons, false);
  add_common(cons);

  auto* repro = app.add_subcommand("reproduce", "reproduce published values");
  repro->add_option("target", st.target, "table1 or constants")->required();
  add_common(repro);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int code = kExitOk;
  std::string text;
  try {
    if (eval->parsed()) code = detail::cmd_eval(st, text);
    if (ratio->parsed()) code = detail::cmd_ratio(st, text);
    if (check->parsed()) code = detail::cmd_check(st, text);
    if (kstar->parsed()) code = detail::cmd_kstar(st, text);
    if (cons->parsed()) code = detail::cmd_construct(st, text);
    if (repro->parsed()) code = detail::cmd_reproduce(st, text);
  } catch (const UsageError& e) {
    err << "ndist: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedScaleError& e) {
    err << "ndist: unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ndist: " << e.what() << '\n';
    return kExitMismatch;
  }

  if (st.output.empty()) {
    out << text;
  } else {
    std::ofstream f(st.output, std::ios::binary);
    if (!f) {
      err << "ndist: cannot write '" << st.output << "'\n";
      return kExitUsage;
    }
    f << text;
  }
  if (code != kExitOk) err << "ndist: mismatch or simplex-inequality violation\n";
  return code;
}

}  // namespace ndist
