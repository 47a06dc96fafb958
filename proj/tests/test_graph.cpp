#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "tritail/edgelist.hpp"
#include "tritail/enumerate.hpp"
#include "tritail/graph.hpp"
#include "tritail/params.hpp"
#include "tritail/rng.hpp"

using namespace tritail;

namespace {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("triangle counts on fixed graphs") {
  CHECK(count_triangles(complete_graph(3)) == 1);
  CHECK(count_triangles(complete_graph(4)) == 4);
  CHECK(count_triangles(complete_graph(5)) == 10);
  CHECK(count_triangles(cycle_graph(5)) == 0);
  CHECK(count_triangles(Graph(6)) == 0);

  // Two triangles sharing an edge.
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  CHECK(count_triangles(g) == 2);
}

TEST_CASE("bitset counter agrees with naive triple loop") {
  SeededRng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    double p = 0.1 + 0.2 * (trial % 5);
    Graph g = sample_gnp(8, p, rng.stream(trial));
    CHECK(count_triangles(g) == count_triangles_naive(g));
  }
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = sample_gnp(33, 0.3, rng.stream(1000 + trial));
    CHECK(count_triangles(g) == count_triangles_naive(g));
  }
}

TEST_CASE("edge and vertex accessors") {
  Graph g(5);
  CHECK_FALSE(g.has_edge(0, 1));
  g.add_edge(0, 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.edge_count() == 1);
  g.add_edge(0, 1);  // idempotent
  CHECK(g.edge_count() == 1);
  g.toggle_edge(0, 1);
  CHECK(g.edge_count() == 0);
  g.toggle_edge(0, 1);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);

  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("common neighbors and per-edge triangle counts") {
  // Path u - v - w: the endpoints share the middle vertex.
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(path.common_neighbors(0, 1) == 0);
  CHECK(path.common_neighbors(0, 2) == 1);

  Graph k4 = complete_graph(4);
  CHECK(k4.common_neighbors(0, 1) == 2);
  auto counts = edge_triangle_counts(k4);
  CHECK(counts.size() == 6);
  for (const auto& e : counts) CHECK(e.triangles == 2);

  // Star: center-leaf edges close no triangles.
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(star.degree(0) == 3);
  for (const auto& e : edge_triangle_counts(star)) CHECK(e.triangles == 0);

  // common_neighbors is defined on non-edges too.
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  CHECK(g.common_neighbors(0, 1) == 1);
}

TEST_CASE("per-edge triangle counts sum to three times the triangle count") {
  SeededRng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = sample_gnp(12, 0.4, rng.stream(trial));
    long long total = 0;
    for (const auto& e : edge_triangle_counts(g)) total += e.triangles;
    CHECK(total == 3 * count_triangles(g));
  }
}

TEST_CASE("degree sums") {
  Graph k4 = complete_graph(4);
  std::vector<int> pairset = {0, 1};
  CHECK(degree_sum(k4, pairset) == 6);
  CHECK(degree_sum(k4, std::vector<int>{}) == 0);

  SeededRng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = sample_gnp(15, 0.5, rng.stream(trial));
    std::vector<int> all(15);
    for (int i = 0; i < 15; ++i) all[i] = i;
    CHECK(degree_sum(g, all) == 2 * g.edge_count());
  }
}

TEST_CASE("sampler endpoints and determinism") {
  SeededRng rng(123);
  Graph empty = sample_gnp(10, 0.0, rng);
  CHECK(empty.edge_count() == 0);
  Graph full = sample_gnp(10, 1.0, rng);
  CHECK(full.edge_count() == 45);

  Graph a = sample_gnp(20, 0.35, SeededRng(555, 3));
  Graph b = sample_gnp(20, 0.35, SeededRng(555, 3));
  for (int u = 0; u < 20; ++u)
    for (int v = u + 1; v < 20; ++v) CHECK(a.has_edge(u, v) == b.has_edge(u, v));

  Graph c = sample_gnp(20, 0.35, SeededRng(555, 4));
  bool differs = false;
  for (int u = 0; u < 20 && !differs; ++u)
    for (int v = u + 1; v < 20; ++v)
      if (a.has_edge(u, v) != c.has_edge(u, v)) {
        differs = true;
        break;
      }
  CHECK(differs);
}

TEST_CASE("sampler edge marginal matches p") {
  const double p = 0.3;
  const int samples = 1000000;
  SeededRng rng(2024);
  int hits = 0;
  for (int i = 0; i < samples; ++i)
    if (sample_gnp(2, p, rng.stream(i)).has_edge(0, 1)) ++hits;
  double freq = static_cast<double>(hits) / samples;
  double se = std::sqrt(p * (1 - p) / samples);
  CHECK(std::abs(freq - p) < 4 * se);
}

TEST_CASE("parameter validation and derived quantities") {
  GnpParams params(10, 0.25, 0.5);
  CHECK(params.L == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(params.L * params.ell == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(params.edge_threshold ==
        doctest::Approx(0.5 * params.ell * 10 * 0.25).epsilon(1e-12));
  CHECK(params.vertex_threshold == doctest::Approx(7.0 * 10 * 0.25).epsilon(1e-12));
  CHECK(params.expected_triangles() == doctest::Approx(120.0 * 0.015625).epsilon(1e-12));
  CHECK(params.tail_threshold() ==
        doctest::Approx(1.5 * params.expected_triangles()).epsilon(1e-12));

  CHECK_THROWS_AS(GnpParams(0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GnpParams(5, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GnpParams(5, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GnpParams(5, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(GnpParams(5, 0.5, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(GnpParams(5, 0.5, 1.0, 0.0), std::invalid_argument);

  // Param-taking sampler overload matches the raw one.
  Graph via_params = sample_gnp(params, SeededRng(9, 1));
  Graph via_raw = sample_gnp(10, 0.25, SeededRng(9, 1));
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      CHECK(via_params.has_edge(u, v) == via_raw.has_edge(u, v));
}

TEST_CASE("exhaustive enumeration visits every labeled graph once") {
  int count3 = 0;
  enumerate_graphs(3, [&](const Graph&, int, std::uint64_t) { ++count3; });
  CHECK(count3 == 8);

  int count4 = 0;
  std::set<std::uint64_t> masks;
  enumerate_graphs(4, [&](const Graph& g, int edges, std::uint64_t mask) {
    ++count4;
    masks.insert(mask);
    CHECK(g.edge_count() == edges);
  });
  CHECK(count4 == 64);
  CHECK(masks.size() == 64);

  CHECK_THROWS_AS(enumerate_graphs(8, [](const Graph&, int, std::uint64_t) {}),
                  std::invalid_argument);
}

TEST_CASE("enumeration weights form a probability distribution") {
  for (double p : {0.1, 0.5, 0.9}) {
    for (int n : {3, 4, 5}) {
      long double total = 0;
      int pairs = pair_count(n);
      enumerate_graphs(n, [&](const Graph&, int edges, std::uint64_t) {
        double w = gnp_graph_weight(edges, pairs, p);
        CHECK(w >= 0.0);
        total += w;
      });
      CHECK(static_cast<double>(total) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  // At p = 1/2 every labeled graph on 4 vertices has weight 2^-6.
  enumerate_graphs(4, [&](const Graph&, int edges, std::uint64_t) {
    CHECK(gnp_graph_weight(edges, 6, 0.5) == doctest::Approx(1.0 / 64).epsilon(1e-15));
  });
}

TEST_CASE("enumeration graph weights match sampler frequencies") {
  // Spot-check one mask's probability against the product formula.
  const double p = 0.35;
  double prob_k3 = std::pow(p, 3);
  double seen = 0;
  enumerate_graphs(3, [&](const Graph& g, int edges, std::uint64_t) {
    if (count_triangles(g) == 1) seen += gnp_graph_weight(edges, 3, p);
  });
  CHECK(seen == doctest::Approx(prob_k3).epsilon(1e-12));
}

TEST_CASE("edge list round trip and parse errors") {
  Graph g(6);
  g.add_edge(0, 5);
  g.add_edge(2, 3);
  g.add_edge(1, 2);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  Graph back = read_edge_list(in);
  CHECK(back.n() == 6);
  CHECK(back.edge_count() == 3);
  CHECK(back.has_edge(0, 5));
  CHECK(back.has_edge(2, 3));
  CHECK(back.has_edge(1, 2));

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return read_edge_list(s);
  };
  CHECK_THROWS_AS(parse("0 1\n"), std::runtime_error);          // missing header
  CHECK_THROWS_AS(parse("n=3\n1 1\n"), std::runtime_error);     // self loop
  CHECK_THROWS_AS(parse("n=3\n0 4\n"), std::runtime_error);     // out of range
  CHECK_THROWS_AS(parse("n=3\n0 1 junk\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("n=zero\n"), std::runtime_error);
  CHECK_NOTHROW(parse("n=4\n# comment\n\n0 1\n"));
}

TEST_CASE("rng streams are reproducible and independent") {
  SeededRng a(77, 0);
  SeededRng b(77, 0);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  SeededRng c(77, 1);
  int same = 0;
  SeededRng a2(77, 0);
  for (int i = 0; i < 64; ++i)
    if (a2.next_u64() == c.next_u64()) ++same;
  CHECK(same == 0);

  SeededRng u(5);
  for (int i = 0; i < 1000; ++i) {
    double x = u.next_u01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}
