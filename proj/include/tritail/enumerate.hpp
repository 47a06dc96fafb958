#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tritail/graph.hpp"

namespace tritail {

// Exhaustive enumeration walks all 2^C(n,2) labeled graphs, so n is capped
// where that count stays around two million.
inline constexpr int kMaxEnumerationVertices = 7;

inline int pair_count(int n) { return n * (n - 1) / 2; }

// P(G(n,p) = g) for a fixed labeled graph g with `edges` edges out of
// `pairs` vertex pairs.
inline double gnp_graph_weight(int edges, int pairs, double p) {
  return std::pow(p, edges) * std::pow(1.0 - p, pairs - edges);
}

// Visit every labeled graph on n vertices exactly once.  Pair i of the
// lexicographic pair list corresponds to bit i of the mask, so callers can
// reproduce any particular graph from its mask.  The Graph object is reused
// across visits; visitors must not hold on to it.
//
// visit(const Graph&, int edge_count, std::uint64_t mask)
template <typename Visit>
void enumerate_graphs(int n, Visit&& visit) {
  if (n < 1 || n > kMaxEnumerationVertices)
    throw std::invalid_argument("enumerate_graphs: n must lie in [1, 7]");
  std::vector<VertexPair> pairs;
  pairs.reserve(pair_count(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  const std::uint64_t total = 1ULL << pairs.size();
  Graph g(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    g.clear();
    int edges = 0;
    for (std::uint64_t bits = mask; bits;) {
      int i = std::countr_zero(bits);
      bits &= bits - 1;
      g.add_edge(pairs[i].first, pairs[i].second);
      ++edges;
    }
    visit(static_cast<const Graph&>(g), edges, mask);
  }
}

}  // namespace tritail
