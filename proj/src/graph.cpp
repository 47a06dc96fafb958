#include "tritail/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace tritail {

namespace {

// Bits at positions strictly greater than b within one word.
inline std::uint64_t mask_above(int b) {
  return b >= 63 ? 0ULL : ~0ULL << (b + 1);
}

// Common neighbors of u and v restricted to indices strictly above v.
inline int common_above(const std::uint64_t* ru, const std::uint64_t* rv, int v, int words) {
  int w = v >> 6;
  int total = std::popcount(ru[w] & rv[w] & mask_above(v & 63));
  for (int i = w + 1; i < words; ++i) total += std::popcount(ru[i] & rv[i]);
  return total;
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) >> 6) {
  if (n < 1) throw std::invalid_argument("Graph: n must be >= 1");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("Graph: vertex out of range: (" + std::to_string(u) + "," +
                                std::to_string(v) + ") with n=" + std::to_string(n_));
  if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
}

void Graph::toggle_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] ^= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] ^= 1ULL << (u & 63);
}

void Graph::clear() {
  bits_.assign(bits_.size(), 0);
}

int Graph::degree(int v) const {
  const std::uint64_t* r = row(v);
  int d = 0;
  for (int i = 0; i < words_; ++i) d += std::popcount(r[i]);
  return d;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (std::uint64_t w : bits_) twice += std::popcount(w);
  return twice / 2;
}

int Graph::common_neighbors(int u, int v) const {
  check_pair(u, v);
  const std::uint64_t* ru = row(u);
  const std::uint64_t* rv = row(v);
  int total = 0;
  for (int i = 0; i < words_; ++i) total += std::popcount(ru[i] & rv[i]);
  return total;
}

Graph sample_gnp(int n, double p, SeededRng rng) {
  if (n < 1) throw std::invalid_argument("sample_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p must lie in [0,1]");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_u01() < p) g.add_edge(u, v);
  return g;
}

long long count_triangles(const Graph& g) {
  const int n = g.n();
  const int words = g.words_per_row();
  long long total = 0;
  for (int u = 0; u < n; ++u) {
    const std::uint64_t* ru = g.row(u);
    for (int w = u >> 6; w < words; ++w) {
      std::uint64_t bits = ru[w];
      if (w == (u >> 6)) bits &= mask_above(u & 63);
      while (bits) {
        int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        total += common_above(ru, g.row(v), v, words);
      }
    }
  }
  return total;
}

long long count_triangles_naive(const Graph& g) {
  const int n = g.n();
  long long total = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (int w = v + 1; w < n; ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++total;
    }
  return total;
}

std::vector<EdgeTriangles> edge_triangle_counts(const Graph& g) {
  const int n = g.n();
  std::vector<EdgeTriangles> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) out.push_back({u, v, g.common_neighbors(u, v)});
  return out;
}

long long degree_sum(const Graph& g, std::span<const int> vertices) {
  long long total = 0;
  for (int v : vertices) total += g.degree(v);
  return total;
}

}  // namespace tritail
