#pragma once

#include <vector>

#include "tritail/classify.hpp"
#include "tritail/graph.hpp"
#include "tritail/params.hpp"

namespace tritail {

// t(F) = sum over pairs uv in F of t_uv (common-neighbor counts).  Pairs need
// not be edges of g.
long long t_sum(const Graph& g, const std::vector<VertexPair>& pairs);

// No two pairs share a vertex.
bool is_matching(const std::vector<VertexPair>& pairs);

// Greedy proper coloring of the "share a vertex" graph on the source pairs:
// pairs are processed in lexicographic order and each takes the smallest color
// absent among earlier pairs it touches.  Each color class is a matching and
// the class count never exceeds (max adjacency degree) + 1.
struct MatchingColoring {
  std::vector<std::vector<VertexPair>> classes;
  std::vector<VertexPair> source;  // lexicographically sorted
};
MatchingColoring greedy_matching_coloring(std::vector<VertexPair> source);

// Bad edges both of whose endpoints are good vertices.  This is the edge set
// whose coloring has at most 14np + 1 classes: each endpoint, being good, has
// degree < 7np, so a pair meets fewer than 2(7np - 1) + ... < 14np others.
std::vector<VertexPair> bad_edges_with_good_endpoints(const Graph& g, const GnpParams& params);

enum class Exactness { exact, heuristic_lower_bound };

// The four rare events driving the deterministic part of the argument.
//   E1: some matching of bad edges has more than L n p elements
//   E2: some matching F with |F| <= floor(L n p) has t(F) > eps n^2 p^2
//   E3: more than L n p bad vertices
//   E4: some vertex set A, |A| <= ceil(L n p), has degree sum >= 7 L n^2 p^2
//
// E3 and E4 are always exact (E4's maximizer is the top-degree set).  E1/E2
// use exact matching routines for n <= 10; at larger n a greedy matching
// serves as a certified lower bound: reported "true" flags always carry a
// verifiable witness, and "false" is downgraded to heuristic whenever the
// greedy value cannot rule the event out.
struct EventFlags {
  bool E1 = false, E2 = false, E3 = false, E4 = false;
  Exactness e1_exactness = Exactness::exact;
  Exactness e2_exactness = Exactness::exact;
  std::vector<VertexPair> e1_witness;
  std::vector<VertexPair> e2_witness;
  std::vector<int> e3_witness;
  std::vector<int> e4_witness;
};
EventFlags detect_events(const Graph& g, const GnpParams& params);

namespace detail {

// Exact maximum-cardinality matching by subset DP; n <= 20.
std::vector<VertexPair> max_matching_exact(int n, const std::vector<VertexPair>& edges);

// Greedy maximal matching in the given order; size >= (maximum)/2.
std::vector<VertexPair> greedy_maximal_matching(const std::vector<VertexPair>& edges);

struct WeightedPair {
  VertexPair pair;
  long long weight;
};

// Exact max-weight matching with at most `cap` pairs, subset DP; n <= 20.
struct CappedMatching {
  long long weight = 0;
  std::vector<VertexPair> pairs;
};
CappedMatching max_weight_matching_capped(int n, const std::vector<WeightedPair>& pairs, int cap);

// Greedy by descending weight under the same cardinality cap.
CappedMatching greedy_weight_matching_capped(std::vector<WeightedPair> pairs, int cap);

}  // namespace detail

}  // namespace tritail
