// tritail: tail bounds, rare-event estimates, and structure checks for
// triangle counts in G(n,p).
#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tritail/bounds.hpp"
#include "tritail/classify.hpp"
#include "tritail/edgelist.hpp"
#include "tritail/estimate.hpp"
#include "tritail/harness.hpp"
#include "tritail/matchings.hpp"
#include "tritail/sweep.hpp"

namespace {

using nlohmann::json;
using namespace tritail;

int env_threads() {
  const char* v = std::getenv("TRITAIL_THREADS");
  if (!v) return 0;
  try {
    return std::max(0, std::stoi(v));
  } catch (...) {
    return 0;
  }
}

// --threads beats TRITAIL_THREADS beats hardware default.
int resolve_threads(std::optional<int> flag) {
  if (flag) return *flag;
  return env_threads();
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << text;
}

double mean_triangles(int n, double p) {
  return static_cast<double>(n) * (n - 1) * (n - 2) / 6.0 * p * p * p;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
  std::string name;
  std::vector<double> t_values;
  std::vector<double> p_values;
  double lambda = 0.0;
  double a = 0.0;
  int n = 0;
  int m = 1;
  double epsilon = 0.0;
  std::string output;
};

int run_bounds(const BoundsArgs& args) {
  std::string csv = "bound_name,t,lambda,a,n,p,epsilon,exponent,prob_bound\n";

  auto row = [&](const std::string& name, double t, double lambda, double a, std::string n_s,
                 std::string p_s, std::string eps_s, double log_bound, double prob) {
    csv += name + "," + format_double(t) + "," + format_double(lambda) + "," + format_double(a) +
           "," + n_s + "," + p_s + "," + eps_s + "," + format_double(log_bound) + "," +
           format_double(prob) + "\n";
  };

  if (args.name == "concentration-sharp" || args.name == "concentration-weak") {
    for (double t : args.t_values) {
      ConcentrationBounds cb = concentration_bound({t, args.lambda, args.a});
      const BoundResult& r = args.name == "concentration-sharp" ? cb.sharp : cb.weak;
      row(args.name, t, args.lambda, args.a, "", "", "", r.log_bound, r.prob_bound);
    }
  } else if (args.name == "binomial") {
    for (double t : args.t_values) {
      BoundResult r = binomial_tail_bound(t, args.lambda);
      row(args.name, t, args.lambda, 1.0, "", "", "", r.log_bound, r.prob_bound);
    }
  } else if (args.name == "matching") {
    for (double p : args.p_values)
      for (double t : args.t_values) {
        BoundResult r = matching_tail_bound(t, args.m, args.n, p);
        row(args.name, t, r.inputs.lambda, r.inputs.a, std::to_string(args.n), format_double(p),
            "", r.log_bound, r.prob_bound);
      }
  } else if (args.name == "degree") {
    for (double p : args.p_values)
      for (double t : args.t_values) {
        BoundResult r = degree_tail_bound(t, args.n, args.m, p);
        row(args.name, t, r.inputs.lambda, r.inputs.a, std::to_string(args.n), format_double(p),
            "", r.log_bound, r.prob_bound);
      }
  } else if (args.name == "threshold-ratio") {
    for (double p : args.p_values) {
      GnpParams params(args.n, p, args.epsilon);
      ThresholdRatio pc = threshold_mean_ratio(args.n, p, args.epsilon);
      double n3p3 = static_cast<double>(args.n) * args.n * args.n * p * p * p;
      double t = pc.lambda + args.epsilon * n3p3;
      double a = 3.0 * params.edge_threshold;
      ConcentrationBounds cb = concentration_bound({t, pc.lambda, a});
      row(args.name, t, pc.lambda, a, std::to_string(args.n), format_double(p),
          format_double(args.epsilon), cb.sharp.log_bound, cb.sharp.prob_bound);
    }
  } else {
    throw CLI::ValidationError(
        "--name", "expected concentration-sharp|concentration-weak|binomial|matching|degree|threshold-ratio");
  }
  emit(csv, args.output);
  return 0;
}

// ---- tail ------------------------------------------------------------------

struct TailArgs {
  std::string method = "exact";
  int n = 0;
  double p = 0.0;
  std::optional<double> epsilon;
  std::optional<double> threshold;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::optional<double> tilt_q;
  double confidence = 0.95;
  std::optional<int> threads;
  bool as_json = false;
  std::string output;
};

int run_tail(const TailArgs& args) {
  if (!args.epsilon && !args.threshold)
    throw CLI::ValidationError("tail", "give --epsilon or --threshold");
  double threshold =
      args.threshold ? *args.threshold : (1.0 + *args.epsilon) * mean_triangles(args.n, args.p);
  int threads = resolve_threads(args.threads);

  TailEstimate est;
  if (args.method == "exact") {
    est = exact_tail(args.n, args.p, threshold);
  } else if (args.method == "plain") {
    est = plain_mc_tail(args.n, args.p, threshold, args.samples, SeededRng(args.seed), threads,
                        args.confidence);
  } else if (args.method == "tilted") {
    double eps_for_tilt = args.epsilon
                              ? *args.epsilon
                              : std::max(0.0, mean_triangles(args.n, args.p) > 0.0
                                                  ? threshold / mean_triangles(args.n, args.p) - 1.0
                                                  : 0.0);
    double q = args.tilt_q ? *args.tilt_q : default_tilt_q(args.p, eps_for_tilt);
    est = tilted_mc_tail(args.n, args.p, threshold, q, args.samples, SeededRng(args.seed),
                         threads, args.confidence);
  } else if (args.method == "clique-lb") {
    double extra = std::max(0.0, threshold - std::ceil(mean_triangles(args.n, args.p)));
    CliquePlantingBound lb = clique_planting_lower_bound(args.p, extra);
    est.method = TailMethod::clique_lb;
    est.p_hat = std::exp(lb.log_prob);
    est.ci_low = est.p_hat;
    est.ci_high = est.p_hat;
  } else {
    throw CLI::ValidationError("--method", "expected exact|plain|tilted|clique-lb");
  }

  json config{{"method", args.method},   {"n", args.n},
              {"p", args.p},             {"threshold", threshold},
              {"samples", args.samples}, {"seed", args.seed},
              {"confidence", args.confidence}};
  if (args.epsilon) config["epsilon"] = *args.epsilon;

  if (args.as_json) {
    json out{{"config", config},
             {"method", tail_method_name(est.method)},
             {"p_hat", est.p_hat},
             {"ci_low", est.ci_low},
             {"ci_high", est.ci_high},
             {"samples", est.samples},
             {"seed", args.seed},
             {"tilt_q", est.tilt_q ? json(*est.tilt_q) : json()},
             {"ess", est.ess},
             {"ess_caveat", est.ess_caveat}};
    emit(out.dump(2) + "\n", args.output);
  } else {
    std::string csv = "# config " + config.dump() + "\n";
    csv += "method,n,p,threshold,p_hat,ci_low,ci_high,samples,seed,tilt_q,ess\n";
    csv += std::string(tail_method_name(est.method)) + "," + std::to_string(args.n) + "," +
           format_double(args.p) + "," + format_double(threshold) + "," +
           format_double(est.p_hat) + "," + format_double(est.ci_low) + "," +
           format_double(est.ci_high) + "," + std::to_string(est.samples) + "," +
           std::to_string(args.seed) + "," +
           (est.tilt_q ? format_double(*est.tilt_q) : std::string()) + "," +
           format_double(est.ess) + "\n";
    emit(csv, args.output);
  }
  return 0;
}

// ---- events ----------------------------------------------------------------

struct EventsArgs {
  int n = 0;
  double p = 0.0;
  double epsilon = 0.0;
  double vertex_constant = 7.0;
  std::uint64_t seed = 0;
  int count = 1;
  std::string output;
};

int run_events(const EventsArgs& args) {
  GnpParams params(args.n, args.p, args.epsilon, args.vertex_constant);
  std::string csv =
      "seed,n,p,epsilon,E1,E2,E3,E4,e1_exactness,e2_exactness,t_bprime,class_count\n";
  for (int i = 0; i < args.count; ++i) {
    std::uint64_t row_seed = args.count == 1 ? args.seed : sweep_row_seed(args.seed, i);
    Graph g = sample_gnp(args.n, args.p, SeededRng(row_seed));
    EventFlags ev = detect_events(g, params);
    std::vector<VertexPair> bprime = bad_edges_with_good_endpoints(g, params);
    MatchingColoring coloring = greedy_matching_coloring(bprime);
    auto exactness = [](Exactness e) {
      return e == Exactness::exact ? "exact" : "heuristic-lower-bound";
    };
    csv += std::to_string(row_seed) + "," + std::to_string(args.n) + "," +
           format_double(args.p) + "," + format_double(args.epsilon) + "," +
           std::to_string(ev.E1) + "," + std::to_string(ev.E2) + "," + std::to_string(ev.E3) +
           "," + std::to_string(ev.E4) + "," + exactness(ev.e1_exactness) + "," +
           exactness(ev.e2_exactness) + "," + std::to_string(t_sum(g, bprime)) + "," +
           std::to_string(coloring.classes.size()) + "\n";
  }
  emit(csv, args.output);
  return 0;
}

// ---- decompose ---------------------------------------------------------------

struct DecomposeArgs {
  int n = 0;
  double p = 0.0;
  double epsilon = 0.0;
  double vertex_constant = 7.0;
  std::uint64_t seed = 0;
  std::string input;  // edge-list file; sampled G(n,p) when empty
  std::string output;
};

int run_decompose(const DecomposeArgs& args) {
  if (args.input.empty() && args.n < 1)
    throw CLI::ValidationError("decompose", "give --n (for sampling) or --input <edge list>");
  Graph g = args.input.empty() ? sample_gnp(args.n, args.p, SeededRng(args.seed))
                               : read_edge_list_file(args.input);
  GnpParams params(args.input.empty() ? args.n : g.n(), args.p, args.epsilon,
                   args.vertex_constant);
  Decomposition d = decompose(g, params);
  json out = decomposition_to_json(d);
  out["n"] = params.n;
  out["p"] = args.p;
  out["epsilon"] = args.epsilon;
  out["seed"] = args.seed;
  emit(out.dump(2) + "\n", args.output);
  return 0;
}

// ---- verify-conditions -------------------------------------------------------

struct VerifyArgs {
  int n = 0;
  double p = 0.0;
  double epsilon = 0.0;
  double vertex_constant = 7.0;
  std::uint64_t seed = 0;
  int count = 10;
  std::string output;
};

int run_verify(const VerifyArgs& args) {
  GnpParams params(args.n, args.p, args.epsilon, args.vertex_constant);

  long long centers_checked = 0;
  bool a_all = true, c_all = true, d_all = true, k2_all = true;
  long long max_excess = LLONG_MIN;
  for (int i = 0; i < args.count; ++i) {
    Graph g = sample_gnp(args.n, args.p, SeededRng(args.seed, i));
    for (int u = 0; u < args.n; ++u)
      for (int v = u + 1; v < args.n; ++v)
        for (int w = v + 1; w < args.n; ++w) {
          ConditionReport rep = check_conditions(g, params, {u, v, w});
          a_all = a_all && rep.a_holds;
          c_all = c_all && rep.c_holds;
          d_all = d_all && rep.d_holds;
          k2_all = k2_all && rep.k2_triangle_bound_holds;
          max_excess = std::max(max_excess, rep.edge_triangle_count_excess);
          ++centers_checked;
        }
  }

  if (centers_checked == 0) max_excess = 0;

  // Condition (b) is distributional; it is enumerable only at tiny n, so the
  // independence section reports on min(n, 5) with center {0,1,2}.
  int n_ind = std::min(args.n, 5);
  json independence;
  if (n_ind >= 3) {
    IndependenceReport rep =
        check_independence(n_ind, args.p, args.epsilon, {0, 1, 2}, args.vertex_constant);
    independence = independence_report_to_json(rep);
    independence["n"] = n_ind;
    independence["center"] = {0, 1, 2};
  }

  bool pass = a_all && c_all && d_all && k2_all &&
              (independence.is_null() ||
               (independence["max_gap"].get<double>() <= 1e-12 &&
                independence["flip_clean"].get<bool>()));
  json out{{"n", args.n},
           {"p", args.p},
           {"epsilon", args.epsilon},
           {"graphs", args.count},
           {"seed", args.seed},
           {"centers_checked", centers_checked},
           {"a_holds", a_all},
           {"c_holds", c_all},
           {"d_holds", d_all},
           {"k2_triangle_bound_holds", k2_all},
           {"max_edge_triangle_count_excess", max_excess},
           {"independence", independence},
           {"pass", pass}};
  emit(out.dump(2) + "\n", args.output);
  return pass ? 0 : 1;
}

// ---- sweep -------------------------------------------------------------------

struct SweepArgs {
  std::string config_path;
  std::vector<int> n_values;
  std::vector<double> p_values;
  std::vector<double> epsilon_values;
  std::vector<std::string> methods;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> threshold;
  std::optional<double> tilt_q;
  std::optional<double> confidence;
  std::optional<int> threads;
  bool timings = false;
  std::string format;
  std::string output;
};

int run_sweep_cmd(const SweepArgs& args) {
  RunConfig config;
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) throw std::runtime_error("cannot open config file: " + args.config_path);
    json j = json::parse(in);
    config = run_config_from_json(j);
  }
  // Flags override file values.
  if (!args.n_values.empty()) config.n_values = args.n_values;
  if (!args.p_values.empty()) config.p_values = args.p_values;
  if (!args.epsilon_values.empty()) config.epsilon_values = args.epsilon_values;
  if (!args.methods.empty()) config.methods = args.methods;
  if (args.samples) config.samples = *args.samples;
  if (args.seed) config.master_seed = *args.seed;
  if (args.threshold) config.threshold = *args.threshold;
  if (args.tilt_q) config.tilt_q = *args.tilt_q;
  if (args.confidence) config.confidence = *args.confidence;
  if (args.timings) config.timings = true;
  config.threads = args.threads ? *args.threads : (env_threads() > 0 ? env_threads() : config.threads);

  SweepResult result = run_sweep(config);
  std::string fmt = args.format.empty() ? "csv" : args.format;
  if (fmt == "csv") {
    emit(sweep_to_csv(result), args.output);
  } else if (fmt == "json") {
    emit(sweep_to_json(result).dump(2) + "\n", args.output);
  } else {
    throw CLI::ValidationError("--format", "expected csv|json");
  }
  return result.error_count == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"upper-tail toolkit for triangle counts in G(n,p)"};
  app.require_subcommand(1);

  BoundsArgs bounds_args;
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate closed-form tail bounds");
  cmd_bounds->add_option("--name", bounds_args.name,
                         "concentration-sharp|concentration-weak|binomial|matching|degree|threshold-ratio")
      ->required();
  cmd_bounds->add_option("--t", bounds_args.t_values, "threshold grid");
  cmd_bounds->add_option("--lambda", bounds_args.lambda, "mean sum");
  cmd_bounds->add_option("--a", bounds_args.a, "localization constant");
  cmd_bounds->add_option("--n", bounds_args.n, "vertex count");
  cmd_bounds->add_option("--m", bounds_args.m, "matching / vertex-set size");
  cmd_bounds->add_option("--p", bounds_args.p_values, "edge probability grid");
  cmd_bounds->add_option("--epsilon", bounds_args.epsilon, "excess factor");
  cmd_bounds->add_option("--output", bounds_args.output, "output file (default stdout)");

  TailArgs tail_args;
  auto* cmd_tail = app.add_subcommand("tail", "estimate P(T >= t)");
  cmd_tail->add_option("--method", tail_args.method, "exact|plain|tilted|clique-lb");
  cmd_tail->add_option("--n", tail_args.n, "vertex count")->required();
  cmd_tail->add_option("--p", tail_args.p, "edge probability")->required();
  cmd_tail->add_option("--epsilon", tail_args.epsilon, "excess factor");
  cmd_tail->add_option("--threshold", tail_args.threshold, "explicit threshold t");
  cmd_tail->add_option("--samples", tail_args.samples, "Monte Carlo samples");
  cmd_tail->add_option("--seed", tail_args.seed, "master seed");
  cmd_tail->add_option("--tilt-q", tail_args.tilt_q, "tilted edge probability");
  cmd_tail->add_option("--confidence", tail_args.confidence, "CI level (default 0.95)");
  cmd_tail->add_option("--threads", tail_args.threads, "worker threads");
  cmd_tail->add_flag("--json", tail_args.as_json, "emit JSON instead of CSV");
  cmd_tail->add_option("--output", tail_args.output, "output file (default stdout)");

  EventsArgs events_args;
  auto* cmd_events = app.add_subcommand("events", "detect the events E1..E4 on samples");
  cmd_events->add_option("--n", events_args.n, "vertex count")->required();
  cmd_events->add_option("--p", events_args.p, "edge probability")->required();
  cmd_events->add_option("--epsilon", events_args.epsilon, "excess factor")->required();
  cmd_events->add_option("--vertex-constant", events_args.vertex_constant,
                         "degree threshold constant (default 7)");
  cmd_events->add_option("--seed", events_args.seed, "master seed");
  cmd_events->add_option("--count", events_args.count, "number of sampled graphs");
  cmd_events->add_option("--output", events_args.output, "output file (default stdout)");

  DecomposeArgs dec_args;
  auto* cmd_dec = app.add_subcommand("decompose", "good/bad triangle decomposition of a sample");
  cmd_dec->add_option("--n", dec_args.n, "vertex count");
  cmd_dec->add_option("--p", dec_args.p, "edge probability")->required();
  cmd_dec->add_option("--epsilon", dec_args.epsilon, "excess factor")->required();
  cmd_dec->add_option("--vertex-constant", dec_args.vertex_constant,
                      "degree threshold constant (default 7)");
  cmd_dec->add_option("--seed", dec_args.seed, "master seed");
  cmd_dec->add_option("--input", dec_args.input, "edge-list file instead of sampling");
  cmd_dec->add_option("--output", dec_args.output, "output file (default stdout)");

  VerifyArgs verify_args;
  auto* cmd_verify = app.add_subcommand("verify-conditions",
                                        "machine-check the concentration conditions");
  cmd_verify->add_option("--n", verify_args.n, "vertex count")->required();
  cmd_verify->add_option("--p", verify_args.p, "edge probability")->required();
  cmd_verify->add_option("--epsilon", verify_args.epsilon, "excess factor")->required();
  cmd_verify->add_option("--vertex-constant", verify_args.vertex_constant,
                         "degree threshold constant (default 7)");
  cmd_verify->add_option("--seed", verify_args.seed, "master seed");
  cmd_verify->add_option("--count", verify_args.count, "number of sampled graphs");
  cmd_verify->add_option("--output", verify_args.output, "output file (default stdout)");

  SweepArgs sweep_args;
  auto* cmd_sweep = app.add_subcommand("sweep", "grid sweep, CSV/JSON emission");
  cmd_sweep->add_option("--config", sweep_args.config_path, "JSON config file");
  cmd_sweep->add_option("--n", sweep_args.n_values, "n grid");
  cmd_sweep->add_option("--p", sweep_args.p_values, "p grid");
  cmd_sweep->add_option("--epsilon", sweep_args.epsilon_values, "epsilon grid");
  cmd_sweep->add_option("--methods", sweep_args.methods, "methods (exact plain tilted clique-lb)");
  cmd_sweep->add_option("--samples", sweep_args.samples, "Monte Carlo samples per row");
  cmd_sweep->add_option("--seed", sweep_args.seed, "master seed");
  cmd_sweep->add_option("--threshold", sweep_args.threshold, "explicit threshold for all rows");
  cmd_sweep->add_option("--tilt-q", sweep_args.tilt_q, "tilted edge probability for all rows");
  cmd_sweep->add_option("--confidence", sweep_args.confidence, "CI level");
  cmd_sweep->add_option("--threads", sweep_args.threads, "worker pool size");
  cmd_sweep->add_flag("--timings", sweep_args.timings, "add runtime column (non-deterministic)");
  cmd_sweep->add_option("--format", sweep_args.format, "csv|json (default csv)");
  cmd_sweep->add_option("--output", sweep_args.output, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_bounds->parsed()) return run_bounds(bounds_args);
    if (cmd_tail->parsed()) return run_tail(tail_args);
    if (cmd_events->parsed()) return run_events(events_args);
    if (cmd_dec->parsed()) return run_decompose(dec_args);
    if (cmd_verify->parsed()) return run_verify(verify_args);
    if (cmd_sweep->parsed()) return run_sweep_cmd(sweep_args);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
