#include "tritail/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "tritail/enumerate.hpp"

namespace tritail {

namespace {

void check_instance(int n, double p) {
  if (n < 1) throw std::invalid_argument("estimate: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("estimate: p must lie in (0,1)");
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

double normal_upper_quantile(double confidence) {
  boost::math::normal_distribution<double> nd;
  return boost::math::quantile(nd, 0.5 + confidence / 2.0);
}

// Integer form of the event {T >= t} for integer T.
long long hit_floor(double t) {
  double c = std::ceil(t);
  if (c < -1e18) return -1000000000000000000LL;
  if (c > 1e18) return 1000000000000000000LL;
  return static_cast<long long>(c);
}

struct ChunkStats {
  std::uint64_t hits = 0;
  double sum_w = 0.0;
  double sum_w2 = 0.0;
};

// Edge masks of all triples, for the single-word fast path (n <= 11 keeps
// C(n,2) <= 55 pair bits).
struct SmallInstance {
  int pairs = 0;
  std::vector<std::uint64_t> triples;
};

SmallInstance build_small_instance(int n) {
  SmallInstance inst;
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
  int next = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) idx[u][v] = next++;
  inst.pairs = next;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        inst.triples.push_back((1ULL << idx[u][v]) | (1ULL << idx[u][w]) |
                               (1ULL << idx[v][w]));
  return inst;
}

// Runs `samples` per-stream simulations under edge probability sample_p and
// returns per-chunk tallies.  Chunk boundaries are fixed multiples of
// kSamplesPerChunk and each sample uses the stream named by its global index,
// so the tallies do not depend on the thread count.  When weighted, each hit
// contributes exp(e*lw_edge + (pairs-e)*lw_nonedge).
std::vector<ChunkStats> mc_chunks(int n, double sample_p, double t, std::uint64_t samples,
                                  const SeededRng& rng, int threads, bool weighted,
                                  double lw_edge, double lw_nonedge) {
  const long long t_min = hit_floor(t);
  const std::uint64_t n_chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  std::vector<ChunkStats> results(n_chunks);
  const int pairs_total = n * (n - 1) / 2;

  const bool small = n <= 11;
  SmallInstance inst;
  if (small) inst = build_small_instance(n);

  auto run_chunk = [&](std::uint64_t c) {
    ChunkStats& st = results[c];
    const std::uint64_t lo = c * kSamplesPerChunk;
    const std::uint64_t hi = std::min(samples, lo + kSamplesPerChunk);
    for (std::uint64_t s = lo; s < hi; ++s) {
      SeededRng stream = rng.stream(s);
      long long tri = 0;
      int edges = 0;
      if (small) {
        std::uint64_t mask = 0;
        for (int i = 0; i < inst.pairs; ++i)
          mask |= static_cast<std::uint64_t>(stream.next_u01() < sample_p) << i;
        edges = std::popcount(mask);
        for (std::uint64_t tm : inst.triples) tri += (mask & tm) == tm;
      } else {
        Graph g = sample_gnp(n, sample_p, stream);
        tri = count_triangles(g);
        edges = static_cast<int>(g.edge_count());
      }
      if (tri >= t_min) {
        ++st.hits;
        if (weighted) {
          double w = std::exp(edges * lw_edge + (pairs_total - edges) * lw_nonedge);
          st.sum_w += w;
          st.sum_w2 += w * w;
        }
      }
    }
  };

  int workers = std::min<std::uint64_t>(resolve_threads(threads), n_chunks);
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i)
      pool.emplace_back([&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < n_chunks;) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace

const char* tail_method_name(TailMethod m) {
  switch (m) {
    case TailMethod::exact: return "exact";
    case TailMethod::plain: return "plain";
    case TailMethod::tilted: return "tilted";
    case TailMethod::clique_lb: return "clique-lb";
  }
  return "?";
}

TailEstimate exact_tail(int n, double p, double t_threshold) {
  check_instance(n, p);
  if (n > kMaxEnumerationVertices)
    throw std::invalid_argument("exact_tail: n must be <= 7 (full enumeration)");
  const int pairs = pair_count(n);
  const long long t_min = hit_floor(t_threshold);

  // Weight depends only on the edge count; precompute the 22 possible values.
  std::vector<double> weight(pairs + 1);
  for (int e = 0; e <= pairs; ++e) weight[e] = gnp_graph_weight(e, pairs, p);

  long double sum = 0.0L;
  enumerate_graphs(n, [&](const Graph& g, int edges, std::uint64_t) {
    if (count_triangles(g) >= t_min) sum += weight[edges];
  });

  TailEstimate est;
  est.method = TailMethod::exact;
  // The certain event must come out as exactly 1 even when the enumerated
  // weights do not sum to 1 in floating point.
  est.p_hat = t_min <= 0 ? 1.0 : std::min(1.0, static_cast<double>(sum));
  est.ci_low = est.p_hat;
  est.ci_high = est.p_hat;
  est.samples = 1ULL << pairs;
  est.ess = 0.0;
  return est;
}

TailEstimate plain_mc_tail(int n, double p, double t_threshold, std::uint64_t samples,
                           SeededRng rng, int threads, double confidence) {
  check_instance(n, p);
  if (samples < 1) throw std::invalid_argument("plain_mc_tail: samples must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::invalid_argument("plain_mc_tail: confidence must lie in (0,1)");

  auto chunks = mc_chunks(n, p, t_threshold, samples, rng, threads, false, 0.0, 0.0);
  std::uint64_t hits = 0;
  for (const ChunkStats& c : chunks) hits += c.hits;

  TailEstimate est;
  est.method = TailMethod::plain;
  est.confidence = confidence;
  est.samples = samples;
  est.master_seed = rng.master_seed();
  est.p_hat = static_cast<double>(hits) / static_cast<double>(samples);
  est.ess = static_cast<double>(hits);

  // Wilson score interval.
  const double z = normal_upper_quantile(est.confidence);
  const double nn = static_cast<double>(samples);
  const double ph = est.p_hat;
  const double denom = 1.0 + z * z / nn;
  const double center = (ph + z * z / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(ph * (1.0 - ph) / nn + z * z / (4.0 * nn * nn)) / denom;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  return est;
}

TailEstimate tilted_mc_tail(int n, double p, double t_threshold, double q,
                            std::uint64_t samples, SeededRng rng, int threads,
                            double confidence) {
  check_instance(n, p);
  if (samples < 1) throw std::invalid_argument("tilted_mc_tail: samples must be >= 1");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::invalid_argument("tilted_mc_tail: confidence must lie in (0,1)");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("tilted_mc_tail: q must lie in (0,1)");
  if (q < p) throw std::invalid_argument("tilted_mc_tail: q must be >= p");

  const double lw_edge = std::log(p / q);
  const double lw_nonedge = std::log((1.0 - p) / (1.0 - q));
  auto chunks = mc_chunks(n, q, t_threshold, samples, rng, threads, true, lw_edge, lw_nonedge);

  // Fixed chunk-order reduction keeps the floating-point result independent
  // of the worker count.
  std::uint64_t hits = 0;
  double sum_w = 0.0, sum_w2 = 0.0;
  for (const ChunkStats& c : chunks) {
    hits += c.hits;
    sum_w += c.sum_w;
    sum_w2 += c.sum_w2;
  }

  TailEstimate est;
  est.method = TailMethod::tilted;
  est.confidence = confidence;
  est.samples = samples;
  est.master_seed = rng.master_seed();
  est.tilt_q = q;
  const double nn = static_cast<double>(samples);
  est.p_hat = std::min(1.0, sum_w / nn);
  est.ess = sum_w2 > 0.0 ? sum_w * sum_w / sum_w2 : 0.0;
  est.ess_caveat = est.ess < 100.0;

  double var = 0.0;
  if (samples > 1) var = std::max(0.0, (sum_w2 - sum_w * sum_w / nn) / (nn - 1.0));
  const double se = std::sqrt(var / nn);
  const double z = normal_upper_quantile(est.confidence);
  est.ci_low = std::max(0.0, est.p_hat - z * se);
  est.ci_high = std::min(1.0, est.p_hat + z * se);
  return est;
}

double default_tilt_q(double p, double epsilon) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("default_tilt_q: p must lie in (0,1)");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("default_tilt_q: epsilon must be >= 0");
  double q = std::cbrt(1.0 + epsilon) * p;
  q = std::min(q, 0.99);
  return std::max(q, p);
}

CliquePlantingBound clique_planting_lower_bound(double p, double extra_triangles) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("clique_planting_lower_bound: p must lie in (0,1)");
  if (!(extra_triangles >= 0.0) || !std::isfinite(extra_triangles))
    throw std::invalid_argument("clique_planting_lower_bound: extra_triangles must be >= 0");
  int k = 2;
  auto c3 = [](int m) { return static_cast<double>(m) * (m - 1) * (m - 2) / 6.0; };
  while (c3(k) < extra_triangles) ++k;
  CliquePlantingBound out;
  out.k = k;
  out.log_prob = static_cast<double>(k) * (k - 1) / 2.0 * std::log(p);
  return out;
}

}  // namespace tritail
