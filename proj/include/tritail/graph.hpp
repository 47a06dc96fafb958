#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tritail/params.hpp"
#include "tritail/rng.hpp"

namespace tritail {

// Normalized vertex pair, first < second.
using VertexPair = std::pair<int, int>;

inline VertexPair ordered_pair(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// Simple undirected graph on vertices 0..n-1, adjacency stored as n bit rows
// of (n+63)/64 words each.  Row intersection + popcount is the workhorse for
// triangle counting and common-neighbor queries.
class Graph {
 public:
  explicit Graph(int n);

  int n() const { return n_; }
  int words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);
  void clear();

  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int degree(int v) const;
  long long edge_count() const;

  // |N(u) ∩ N(v)|; equals the number of triangles through uv when uv is an edge.
  int common_neighbors(int u, int v) const;

 private:
  void check_pair(int u, int v) const;

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

// Each pair {u,v}, u<v, becomes an edge independently with probability p.
// Pairs are visited in lexicographic order, one uniform draw per pair, so a
// given (seed, stream) pins down the graph exactly.  p = 0 and p = 1 are
// allowed here (empty / complete graph); GnpParams is stricter.
Graph sample_gnp(int n, double p, SeededRng rng);

inline Graph sample_gnp(const GnpParams& params, SeededRng rng) {
  return sample_gnp(params.n, params.p, rng);
}

// Total triangle count via row intersections, O(n * m / 64) word operations.
long long count_triangles(const Graph& g);

// Reference implementation: iterate all C(n,3) triples.  Kept simple on
// purpose; used to cross-check count_triangles.
long long count_triangles_naive(const Graph& g);

// Triangles through each present edge, lexicographically ordered by (u,v).
struct EdgeTriangles {
  int u;
  int v;
  int triangles;
};
std::vector<EdgeTriangles> edge_triangle_counts(const Graph& g);

// Sum of deg(v) over a vertex set.
long long degree_sum(const Graph& g, std::span<const int> vertices);

}  // namespace tritail
