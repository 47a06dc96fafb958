#include "tritail/matchings.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tritail {

long long t_sum(const Graph& g, const std::vector<VertexPair>& pairs) {
  long long total = 0;
  for (const auto& [u, v] : pairs) total += g.common_neighbors(u, v);
  return total;
}

bool is_matching(const std::vector<VertexPair>& pairs) {
  std::vector<int> seen;
  seen.reserve(pairs.size() * 2);
  for (const auto& [u, v] : pairs) {
    if (u == v) return false;
    seen.push_back(u);
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

MatchingColoring greedy_matching_coloring(std::vector<VertexPair> source) {
  for (auto& pr : source) {
    if (pr.first == pr.second)
      throw std::invalid_argument("greedy_matching_coloring: degenerate pair");
    pr = ordered_pair(pr.first, pr.second);
  }
  std::sort(source.begin(), source.end());
  source.erase(std::unique(source.begin(), source.end()), source.end());

  MatchingColoring out;
  out.source = source;
  std::vector<int> color(source.size(), -1);
  std::vector<char> used;
  for (std::size_t i = 0; i < source.size(); ++i) {
    used.assign(out.classes.size(), 0);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = source[i];
      const auto& b = source[j];
      if (a.first == b.first || a.first == b.second || a.second == b.first ||
          a.second == b.second)
        used[color[j]] = 1;
    }
    std::size_t c = 0;
    while (c < used.size() && used[c]) ++c;
    if (c == out.classes.size()) out.classes.emplace_back();
    color[i] = static_cast<int>(c);
    out.classes[c].push_back(source[i]);
  }
  return out;
}

std::vector<VertexPair> bad_edges_with_good_endpoints(const Graph& g, const GnpParams& params) {
  Classification c = classify(g, params);
  std::vector<char> good(g.n(), 0);
  for (int v : c.good_vertices) good[v] = 1;
  std::vector<VertexPair> out;
  for (const auto& e : c.bad_edges)
    if (good[e.first] && good[e.second]) out.push_back(e);
  return out;
}

namespace detail {

namespace {

constexpr int kExactMatchingMaxVertices = 20;
constexpr int kExactCappedMaxVertices = 14;

void check_vertices(int n, const std::vector<VertexPair>& edges, int limit, const char* who) {
  if (n < 1 || n > limit)
    throw std::invalid_argument(std::string(who) + ": vertex count out of range");
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument(std::string(who) + ": invalid pair");
}

}  // namespace

std::vector<VertexPair> max_matching_exact(int n, const std::vector<VertexPair>& edges) {
  check_vertices(n, edges, kExactMatchingMaxVertices, "max_matching_exact");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<signed char> memo(static_cast<std::size_t>(full) + 1, -1);

  auto solve = [&](auto&& self, std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    signed char& m = memo[mask];
    if (m >= 0) return m;
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << v);
    int best = self(self, rest);
    for (std::uint32_t nb = adj[v] & rest; nb;) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      best = std::max(best, 1 + self(self, rest & ~(1u << u)));
    }
    m = static_cast<signed char>(best);
    return best;
  };

  std::vector<VertexPair> out;
  std::uint32_t mask = full;
  int remaining = solve(solve, mask);
  while (mask && remaining > 0) {
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << v);
    if (solve(solve, rest) == remaining) {
      mask = rest;
      continue;
    }
    for (std::uint32_t nb = adj[v] & rest; nb;) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (1 + solve(solve, rest & ~(1u << u)) == remaining) {
        out.push_back(ordered_pair(v, u));
        mask = rest & ~(1u << u);
        --remaining;
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPair> greedy_maximal_matching(const std::vector<VertexPair>& edges) {
  std::vector<VertexPair> out;
  std::vector<int> taken;
  auto free_vertex = [&](int v) { return std::find(taken.begin(), taken.end(), v) == taken.end(); };
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("greedy_maximal_matching: degenerate pair");
    if (free_vertex(u) && free_vertex(v)) {
      out.push_back(ordered_pair(u, v));
      taken.push_back(u);
      taken.push_back(v);
    }
  }
  return out;
}

CappedMatching max_weight_matching_capped(int n, const std::vector<WeightedPair>& pairs,
                                          int cap) {
  std::vector<VertexPair> as_pairs;
  as_pairs.reserve(pairs.size());
  for (const auto& wp : pairs) {
    as_pairs.push_back(wp.pair);
    if (wp.weight < 0)
      throw std::invalid_argument("max_weight_matching_capped: negative weight");
  }
  check_vertices(n, as_pairs, kExactCappedMaxVertices, "max_weight_matching_capped");
  if (cap < 0) cap = 0;
  cap = std::min(cap, n / 2);

  std::vector<std::uint32_t> adj(n, 0);
  std::vector<long long> w(static_cast<std::size_t>(n) * n, 0);
  for (const auto& wp : pairs) {
    auto [u, v] = ordered_pair(wp.pair.first, wp.pair.second);
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
    long long& slot = w[static_cast<std::size_t>(u) * n + v];
    slot = std::max(slot, wp.weight);
    w[static_cast<std::size_t>(v) * n + u] = slot;
  }

  const std::uint32_t full = (1u << n) - 1;
  const std::size_t width = static_cast<std::size_t>(cap) + 1;
  std::vector<long long> memo((static_cast<std::size_t>(full) + 1) * width, -1);

  auto solve = [&](auto&& self, std::uint32_t mask, int c) -> long long {
    if (mask == 0 || c == 0) return 0;
    long long& m = memo[static_cast<std::size_t>(mask) * width + c];
    if (m >= 0) return m;
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << v);
    long long best = self(self, rest, c);
    for (std::uint32_t nb = adj[v] & rest; nb;) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      best = std::max(best, w[static_cast<std::size_t>(v) * n + u] +
                                self(self, rest & ~(1u << u), c - 1));
    }
    m = best;
    return best;
  };

  CappedMatching out;
  std::uint32_t mask = full;
  int c = cap;
  out.weight = solve(solve, mask, c);
  long long remaining = out.weight;
  while (mask && c > 0 && remaining > 0) {
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << v);
    if (solve(solve, rest, c) == remaining) {
      mask = rest;
      continue;
    }
    bool advanced = false;
    for (std::uint32_t nb = adj[v] & rest; nb;) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      long long wuv = w[static_cast<std::size_t>(v) * n + u];
      if (wuv + solve(solve, rest & ~(1u << u), c - 1) == remaining) {
        out.pairs.push_back(ordered_pair(v, u));
        mask = rest & ~(1u << u);
        remaining -= wuv;
        --c;
        advanced = true;
        break;
      }
    }
    if (!advanced) mask = rest;  // zero-weight tail; unreachable with positive weights
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

CappedMatching greedy_weight_matching_capped(std::vector<WeightedPair> pairs, int cap) {
  std::sort(pairs.begin(), pairs.end(), [](const WeightedPair& a, const WeightedPair& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.pair < b.pair;
  });
  CappedMatching out;
  std::vector<int> taken;
  auto free_vertex = [&](int v) { return std::find(taken.begin(), taken.end(), v) == taken.end(); };
  for (const auto& wp : pairs) {
    if (static_cast<int>(out.pairs.size()) >= cap) break;
    auto [u, v] = ordered_pair(wp.pair.first, wp.pair.second);
    if (free_vertex(u) && free_vertex(v)) {
      out.pairs.push_back({u, v});
      out.weight += wp.weight;
      taken.push_back(u);
      taken.push_back(v);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace detail

EventFlags detect_events(const Graph& g, const GnpParams& params) {
  if (g.n() != params.n)
    throw std::invalid_argument("detect_events: graph order does not match params.n");
  const int n = g.n();
  const double Lnp = params.L * n * params.p;

  EventFlags out;
  Classification cls = classify(g, params);

  // E3: more than Lnp bad vertices.
  if (static_cast<double>(cls.bad_vertices.size()) > Lnp) {
    out.E3 = true;
    out.e3_witness = cls.bad_vertices;
  }

  // E4: the degree sum of any set of at most ceil(Lnp) vertices is maximized
  // by taking the top degrees, so the check is exact.
  {
    int cap = static_cast<int>(std::ceil(Lnp));
    cap = std::min(cap, n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    long long top_sum = 0;
    for (int i = 0; i < cap; ++i) top_sum += g.degree(order[i]);
    double e4_threshold = params.vertex_degree_constant * params.L * n * n * params.p * params.p;
    if (static_cast<double>(top_sum) >= e4_threshold) {
      out.E4 = true;
      out.e4_witness.assign(order.begin(), order.begin() + cap);
      std::sort(out.e4_witness.begin(), out.e4_witness.end());
    }
  }

  const bool exact_mode = n <= 10;

  // E1: a matching of bad edges larger than Lnp.
  {
    const auto& bad = cls.bad_edges;
    if (exact_mode) {
      std::vector<VertexPair> mm = detail::max_matching_exact(n, bad);
      if (static_cast<double>(mm.size()) > Lnp) {
        out.E1 = true;
        out.e1_witness = std::move(mm);
      }
    } else {
      std::vector<VertexPair> gm = detail::greedy_maximal_matching(bad);
      double upper = static_cast<double>(std::min<std::size_t>(bad.size(), n / 2));
      upper = std::min(upper, 2.0 * static_cast<double>(gm.size()));
      if (static_cast<double>(gm.size()) > Lnp) {
        out.E1 = true;
        out.e1_witness = std::move(gm);
      } else if (upper > Lnp) {
        // Greedy cannot decide: maximum may lie in (greedy, 2*greedy].
        out.e1_exactness = Exactness::heuristic_lower_bound;
      }
    }
  }

  // E2: a matching of at most floor(Lnp) pairs with t(F) > eps n^2 p^2.
  // Candidates are all pairs with t_uv > 0, edges or not.
  {
    const double threshold = params.epsilon * n * n * params.p * params.p;
    const int cap = static_cast<int>(std::floor(Lnp));
    if (cap >= 1) {
      std::vector<detail::WeightedPair> candidates;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          int t = g.common_neighbors(u, v);
          if (t > 0) candidates.push_back({{u, v}, t});
        }
      if (exact_mode) {
        detail::CappedMatching best = detail::max_weight_matching_capped(n, candidates, cap);
        if (static_cast<double>(best.weight) > threshold) {
          out.E2 = true;
          out.e2_witness = std::move(best.pairs);
        }
      } else {
        detail::CappedMatching greedy = detail::greedy_weight_matching_capped(candidates, cap);
        if (static_cast<double>(greedy.weight) > threshold) {
          out.E2 = true;
          out.e2_witness = std::move(greedy.pairs);
        } else {
          // Sum of the cap largest candidate weights bounds any capped
          // matching from above; below the threshold it certifies falsity.
          std::vector<long long> ws;
          ws.reserve(candidates.size());
          for (const auto& wp : candidates) ws.push_back(wp.weight);
          std::sort(ws.rbegin(), ws.rend());
          long long upper = 0;
          for (std::size_t i = 0; i < ws.size() && i < static_cast<std::size_t>(cap); ++i)
            upper += ws[i];
          if (static_cast<double>(upper) > threshold)
            out.e2_exactness = Exactness::heuristic_lower_bound;
        }
      }
    }
  }

  return out;
}

}  // namespace tritail
