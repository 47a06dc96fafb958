#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tritail/estimate.hpp"

namespace tritail {

// A reproducible experiment: a grid of (n, p, epsilon) crossed with methods.
// Serialized verbatim into every output so any row can be re-derived from the
// file alone.
struct RunConfig {
  std::vector<int> n_values;
  std::vector<double> p_values;
  std::vector<double> epsilon_values;
  std::vector<std::string> methods;  // exact | plain | tilted | clique-lb
  std::uint64_t samples = 100000;
  std::uint64_t master_seed = 0;
  std::optional<double> threshold;  // default: (1+epsilon) E[T] per row
  std::optional<double> tilt_q;     // default: (1+epsilon)^{1/3} p per row
  double confidence = 0.95;
  int threads = 0;     // worker pool size; 0 = hardware concurrency
  bool timings = false;  // runtime column is opt-in: it breaks byte determinism
};

// Throws std::invalid_argument on an invalid config (empty grids, p outside
// (0,1), unknown method, ...).
void validate_config(const RunConfig& config);

RunConfig run_config_from_json(const nlohmann::json& j);
nlohmann::json run_config_to_json(const RunConfig& config);

struct SweepRow {
  int index = 0;
  int n = 0;
  double p = 0.0;
  double epsilon = 0.0;
  double threshold = 0.0;
  std::string method;
  std::uint64_t row_seed = 0;
  bool ok = false;
  std::string error;
  TailEstimate est;
  double norm_exponent = 0.0;  // -log(p_hat) / (n^2 p^2 L)
  double runtime_s = 0.0;
};

struct SweepResult {
  RunConfig config;
  std::vector<SweepRow> rows;
  int error_count = 0;
};

// Runs every grid row, worker pool of config.threads, rows ordered by grid
// index regardless of completion order.  Row failures (e.g. method exact at
// n > 7) are recorded on the row; the sweep continues.
SweepResult run_sweep(const RunConfig& config);

// Per-row seed, derived from the master seed and the grid index; printed in
// the seed column so a single row can be reproduced with `tail --seed <s>`.
std::uint64_t sweep_row_seed(std::uint64_t master_seed, int grid_index);

std::string sweep_to_csv(const SweepResult& result);
nlohmann::json sweep_to_json(const SweepResult& result);

// Locale-independent shortest round-trip formatting, shared by all emitters.
std::string format_double(double x);

}  // namespace tritail
