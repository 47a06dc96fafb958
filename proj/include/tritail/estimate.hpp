#pragma once

#include <cstdint>
#include <optional>

#include "tritail/graph.hpp"
#include "tritail/rng.hpp"

namespace tritail {

enum class TailMethod { exact, plain, tilted, clique_lb };

const char* tail_method_name(TailMethod m);

// One tail-probability answer for P(T >= t) in G(n,p).
//
// ess is the Kish effective sample size of the hit contributions,
// (sum x)^2 / (sum x^2); for plain MC that is simply the hit count.  The
// caveat flag marks tilted estimates whose ESS fell below 100, where the
// normal-approximation interval should not be trusted.
struct TailEstimate {
  TailMethod method = TailMethod::exact;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t master_seed = 0;
  std::optional<double> tilt_q;
  double ess = 0.0;
  bool ess_caveat = false;
  double confidence = 0.95;
};

// Exact tail by summing p^e (1-p)^(N-e) over all labeled graphs with
// T >= t_threshold.  Refused above n = 7 (2^21 graphs).
TailEstimate exact_tail(int n, double p, double t_threshold);

// Fraction of `samples` G(n,p) draws with T >= t_threshold, Wilson score
// interval.  Per-sample RNG streams are derived from rng's master seed by
// sample index, and partial results merge in fixed chunk order, so the result
// is bit-identical for any worker count.  threads <= 0 picks the hardware
// concurrency.
TailEstimate plain_mc_tail(int n, double p, double t_threshold, std::uint64_t samples,
                           SeededRng rng, int threads = 0, double confidence = 0.95);

inline TailEstimate plain_mc_tail(const GnpParams& params, double t_threshold,
                                  std::uint64_t samples, SeededRng rng, int threads = 0,
                                  double confidence = 0.95) {
  return plain_mc_tail(params.n, params.p, t_threshold, samples, rng, threads, confidence);
}

// Importance sampling: draw G(n,q) with q >= p and weight each hit by
// (p/q)^e ((1-p)/(1-q))^(N-e).  Unbiased for the exact tail; interval is the
// normal approximation from the sample variance of the weighted indicators.
TailEstimate tilted_mc_tail(int n, double p, double t_threshold, double q,
                            std::uint64_t samples, SeededRng rng, int threads = 0,
                            double confidence = 0.95);

inline TailEstimate tilted_mc_tail(const GnpParams& params, double t_threshold, double q,
                                   std::uint64_t samples, SeededRng rng, int threads = 0,
                                   double confidence = 0.95) {
  return tilted_mc_tail(params.n, params.p, t_threshold, q, samples, rng, threads, confidence);
}

// Default tilt: scale p by (1+epsilon)^{1/3} so E[T] scales by about (1+eps),
// clamped into (p, 0.99].
double default_tilt_q(double p, double epsilon);

// Probability that a fixed k-clique is fully present, for the smallest k whose
// clique holds extra_triangles triangles.  Planting a clique only adds edges,
// so this lower-bounds the tail at threshold ceil(E[T]) + extra.
struct CliquePlantingBound {
  int k = 0;
  double log_prob = 0.0;
};
CliquePlantingBound clique_planting_lower_bound(double p, double extra_triangles);

inline CliquePlantingBound clique_planting_lower_bound(const GnpParams& params,
                                                       double extra_triangles) {
  return clique_planting_lower_bound(params.p, extra_triangles);
}

// Chunk granularity of the deterministic parallel merge; fixed so the split
// never depends on the worker count.
inline constexpr std::uint64_t kSamplesPerChunk = 8192;

}  // namespace tritail
