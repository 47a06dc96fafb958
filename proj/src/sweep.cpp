#include "tritail/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "tritail/rng.hpp"

namespace tritail {

namespace {

const char* const kMethods[] = {"exact", "plain", "tilted", "clique-lb"};

bool known_method(const std::string& m) {
  return std::find(std::begin(kMethods), std::end(kMethods), m) != std::end(kMethods);
}

double expected_triangles(int n, double p) {
  return static_cast<double>(n) * (n - 1) * (n - 2) / 6.0 * p * p * p;
}

SweepRow run_row(const RunConfig& config, int index, int n, double p, double epsilon,
                 const std::string& method) {
  SweepRow row;
  row.index = index;
  row.n = n;
  row.p = p;
  row.epsilon = epsilon;
  row.method = method;
  row.row_seed = sweep_row_seed(config.master_seed, index);
  row.threshold = config.threshold ? *config.threshold : (1.0 + epsilon) * expected_triangles(n, p);

  auto started = std::chrono::steady_clock::now();
  try {
    if (method == "exact") {
      row.est = exact_tail(n, p, row.threshold);
    } else if (method == "plain") {
      row.est = plain_mc_tail(n, p, row.threshold, config.samples, SeededRng(row.row_seed), 1,
                              config.confidence);
    } else if (method == "tilted") {
      double q = config.tilt_q ? *config.tilt_q : default_tilt_q(p, epsilon);
      row.est = tilted_mc_tail(n, p, row.threshold, q, config.samples, SeededRng(row.row_seed),
                               1, config.confidence);
    } else {  // clique-lb
      double ceil_mean = std::ceil(expected_triangles(n, p));
      double extra = std::max(0.0, row.threshold - ceil_mean);
      CliquePlantingBound lb = clique_planting_lower_bound(p, extra);
      row.est.method = TailMethod::clique_lb;
      row.est.p_hat = std::exp(lb.log_prob);
      row.est.ci_low = row.est.p_hat;
      row.est.ci_high = row.est.p_hat;
      row.est.samples = 0;
    }
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (row.ok) {
    double n2p2l = static_cast<double>(n) * n * p * p * std::log(1.0 / p);
    row.norm_exponent = -std::log(row.est.p_hat) / n2p2l;
  }
  return row;
}

void append_csv_field(std::string& out, const std::string& s) {
  out += s;
  out += ',';
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (config.n_values.empty() || config.p_values.empty() || config.epsilon_values.empty())
    throw std::invalid_argument("config: n/p/epsilon grids must be non-empty");
  if (config.methods.empty()) throw std::invalid_argument("config: method list must be non-empty");
  for (const auto& m : config.methods)
    if (!known_method(m))
      throw std::invalid_argument("config: unknown method \"" + m +
                                  "\" (expected exact|plain|tilted|clique-lb)");
  for (int n : config.n_values)
    if (n < 1) throw std::invalid_argument("config: n values must be >= 1");
  for (double p : config.p_values)
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("config: p values must lie in (0,1)");
  for (double e : config.epsilon_values)
    if (!(e > 0.0)) throw std::invalid_argument("config: epsilon values must be > 0");
  if (config.samples < 1) throw std::invalid_argument("config: samples must be >= 1");
  if (!(config.confidence > 0.0 && config.confidence < 1.0))
    throw std::invalid_argument("config: confidence must lie in (0,1)");
  if (config.threshold && !(*config.threshold >= 0.0))
    throw std::invalid_argument("config: threshold must be >= 0");
  if (config.tilt_q && !(*config.tilt_q > 0.0 && *config.tilt_q < 1.0))
    throw std::invalid_argument("config: tilt_q must lie in (0,1)");
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  RunConfig c;
  if (j.contains("n")) c.n_values = j.at("n").get<std::vector<int>>();
  if (j.contains("p")) c.p_values = j.at("p").get<std::vector<double>>();
  if (j.contains("epsilon")) c.epsilon_values = j.at("epsilon").get<std::vector<double>>();
  if (j.contains("methods")) c.methods = j.at("methods").get<std::vector<std::string>>();
  if (j.contains("samples")) c.samples = j.at("samples").get<std::uint64_t>();
  if (j.contains("seed")) c.master_seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("threshold") && !j.at("threshold").is_null())
    c.threshold = j.at("threshold").get<double>();
  if (j.contains("tilt_q") && !j.at("tilt_q").is_null()) c.tilt_q = j.at("tilt_q").get<double>();
  if (j.contains("confidence")) c.confidence = j.at("confidence").get<double>();
  if (j.contains("threads")) c.threads = j.at("threads").get<int>();
  if (j.contains("timings")) c.timings = j.at("timings").get<bool>();
  return c;
}

nlohmann::json run_config_to_json(const RunConfig& config) {
  nlohmann::json j;
  j["n"] = config.n_values;
  j["p"] = config.p_values;
  j["epsilon"] = config.epsilon_values;
  j["methods"] = config.methods;
  j["samples"] = config.samples;
  j["seed"] = config.master_seed;
  j["threshold"] = config.threshold ? nlohmann::json(*config.threshold) : nlohmann::json();
  j["tilt_q"] = config.tilt_q ? nlohmann::json(*config.tilt_q) : nlohmann::json();
  j["confidence"] = config.confidence;
  j["threads"] = config.threads;
  j["timings"] = config.timings;
  return j;
}

std::uint64_t sweep_row_seed(std::uint64_t master_seed, int grid_index) {
  return mix64(mix64(master_seed) ^
               mix64(0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(grid_index) + 1)));
}

SweepResult run_sweep(const RunConfig& config) {
  validate_config(config);

  struct RowSpec {
    int n;
    double p, epsilon;
    std::string method;
  };
  std::vector<RowSpec> specs;
  for (int n : config.n_values)
    for (double p : config.p_values)
      for (double epsilon : config.epsilon_values)
        for (const auto& m : config.methods) specs.push_back({n, p, epsilon, m});

  SweepResult result;
  result.config = config;
  result.rows.resize(specs.size());

  int workers = config.threads > 0
                    ? config.threads
                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<int>(workers, static_cast<int>(specs.size()));

  auto work = [&](int i) {
    const RowSpec& s = specs[i];
    result.rows[i] = run_row(config, i, s.n, s.p, s.epsilon, s.method);
  };

  if (workers <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) work(static_cast<int>(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) work(static_cast<int>(i));
      });
    for (auto& th : pool) th.join();
  }

  for (const SweepRow& r : result.rows)
    if (!r.ok) ++result.error_count;
  return result;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = "# config ";
  out += run_config_to_json(result.config).dump();
  out += '\n';
  out +=
      "index,method,n,p,epsilon,threshold,p_hat,ci_low,ci_high,samples,seed,tilt_q,ess,"
      "norm_exponent";
  if (result.config.timings) out += ",runtime_s";
  out += ",error\n";

  for (const SweepRow& r : result.rows) {
    std::string line;
    append_csv_field(line, std::to_string(r.index));
    append_csv_field(line, r.method);
    append_csv_field(line, std::to_string(r.n));
    append_csv_field(line, format_double(r.p));
    append_csv_field(line, format_double(r.epsilon));
    append_csv_field(line, format_double(r.threshold));
    if (r.ok) {
      append_csv_field(line, format_double(r.est.p_hat));
      append_csv_field(line, format_double(r.est.ci_low));
      append_csv_field(line, format_double(r.est.ci_high));
      append_csv_field(line, std::to_string(r.est.samples));
      append_csv_field(line, std::to_string(r.row_seed));
      append_csv_field(line, r.est.tilt_q ? format_double(*r.est.tilt_q) : "");
      append_csv_field(line, format_double(r.est.ess));
      append_csv_field(line, format_double(r.norm_exponent));
    } else {
      for (int i = 0; i < 4; ++i) append_csv_field(line, "");
      append_csv_field(line, std::to_string(r.row_seed));
      for (int i = 0; i < 3; ++i) append_csv_field(line, "");
    }
    if (result.config.timings) append_csv_field(line, format_double(r.runtime_s));
    line += csv_quote(r.error);  // empty on success
    out += line;
    out += '\n';
  }
  return out;
}

nlohmann::json sweep_to_json(const SweepResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json errors = nlohmann::json::array();
  for (const SweepRow& r : result.rows) {
    nlohmann::json row{{"index", r.index},   {"method", r.method},
                       {"n", r.n},           {"p", r.p},
                       {"epsilon", r.epsilon}, {"threshold", r.threshold},
                       {"seed", r.row_seed}, {"ok", r.ok}};
    if (r.ok) {
      row["p_hat"] = r.est.p_hat;
      row["ci_low"] = r.est.ci_low;
      row["ci_high"] = r.est.ci_high;
      row["samples"] = r.est.samples;
      row["tilt_q"] = r.est.tilt_q ? nlohmann::json(*r.est.tilt_q) : nlohmann::json();
      row["ess"] = r.est.ess;
      row["ess_caveat"] = r.est.ess_caveat;
      row["norm_exponent"] = r.norm_exponent;
    } else {
      row["error"] = r.error;
      errors.push_back(nlohmann::json{{"index", r.index}, {"error", r.error}});
    }
    if (result.config.timings) row["runtime_s"] = r.runtime_s;
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"config", run_config_to_json(result.config)},
                        {"rows", rows},
                        {"errors", errors}};
}

}  // namespace tritail
