#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "tritail/classify.hpp"
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

// Slow re-derivation of the triangle buckets straight from the definitions,
// used as an oracle against decompose.
struct SlowBuckets {
  long long t = 0, t_prime = 0, t0 = 0, t1 = 0, t2 = 0, t3 = 0;
  long long zero_bad_vertices = 0;
};

SlowBuckets slow_decompose(const Graph& g, const GnpParams& params) {
  int n = g.n();
  std::set<std::pair<int, int>> bad_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) &&
          static_cast<double>(g.common_neighbors(u, v)) >= params.edge_threshold)
        bad_edges.insert({u, v});
  std::vector<bool> bad_vertex(n, false);
  for (int v = 0; v < n; ++v)
    bad_vertex[v] = static_cast<double>(g.degree(v)) >= params.vertex_threshold;

  SlowBuckets out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (!(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))) continue;
        ++out.t;
        int bad_e = bad_edges.count({a, b}) + bad_edges.count({a, c}) +
                    bad_edges.count({b, c});
        int bad_v = bad_vertex[a] + bad_vertex[b] + bad_vertex[c];
        if (bad_e == 0) ++out.t_prime;
        if (bad_e >= 1 && bad_v == 0) ++out.t0;
        if (bad_v == 0) ++out.zero_bad_vertices;
        if (bad_v == 1) ++out.t1;
        if (bad_v == 2) ++out.t2;
        if (bad_v == 3) ++out.t3;
      }
  return out;
}

}  // namespace

TEST_CASE("triangle with generous thresholds is entirely good") {
  GnpParams params(3, 0.5, 1.0);
  Graph k3 = complete_graph(3);
  Classification c = classify(k3, params);
  CHECK(c.good_edges.size() == 3);
  CHECK(c.bad_edges.empty());
  CHECK(c.good_vertices.size() == 3);
  CHECK(c.bad_vertices.empty());

  Decomposition d = decompose(k3, params);
  CHECK(d.T == 1);
  CHECK(d.T_prime == 1);
  CHECK(d.T0 == 0);
  CHECK(d.T1 == 0);
  CHECK(d.T2 == 0);
  CHECK(d.T3 == 0);
}

TEST_CASE("empty graph classifies trivially") {
  GnpParams params(5, 0.3, 0.5);
  Graph g(5);
  Classification c = classify(g, params);
  CHECK(c.good_edges.empty());
  CHECK(c.bad_edges.empty());
  CHECK(c.good_vertices.size() == 5);
  Decomposition d = decompose(g, params);
  CHECK(d.T == 0);
  CHECK(d.T_prime + d.T0 + d.T1 + d.T2 + d.T3 == 0);
}

TEST_CASE("dense graph at small p is all bad") {
  // K6 at p = 0.1: vertex threshold 7np = 4.2 < degree 5, so every vertex is
  // bad; edge threshold is ~0.26 < t_uv = 4, so every edge is bad too.
  GnpParams params(6, 0.1, 1.0);
  Graph k6 = complete_graph(6);
  Classification c = classify(k6, params);
  CHECK(c.bad_vertices.size() == 6);
  CHECK(c.good_vertices.empty());
  CHECK(c.bad_edges.size() == 15);
  CHECK(c.good_edges.empty());

  Decomposition d = decompose(k6, params);
  CHECK(d.T == 20);
  CHECK(d.T_prime == 0);
  CHECK(d.T0 == 0);  // no triangle has all-good vertices
  CHECK(d.T3 == 20);
}

TEST_CASE("strict inequality at the threshold boundary") {
  // Pick epsilon so the edge threshold is exactly 1: eps = L/(np).
  // A triangle's edges each close exactly one triangle, t_uv = 1 >= 1 -> bad.
  double p = 0.5, n = 4;
  double eps = std::log(1.0 / p) / (n * p);
  GnpParams params(4, p, eps);
  CHECK(params.edge_threshold == doctest::Approx(1.0).epsilon(1e-12));
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  Classification c = classify(g, params);
  CHECK(c.bad_edges.size() == 3);
  CHECK(c.good_edges.empty());

  // Vertex threshold exactly 1 via the configurable constant: degree-1
  // vertices must come out bad.
  GnpParams vparams(4, p, 1.0, /*vertex_degree_constant=*/0.5);
  CHECK(vparams.vertex_threshold == doctest::Approx(1.0).epsilon(1e-12));
  Graph k2(4);
  k2.add_edge(0, 1);
  Classification vc = classify(k2, vparams);
  CHECK(std::count(vc.bad_vertices.begin(), vc.bad_vertices.end(), 0) == 1);
  CHECK(std::count(vc.bad_vertices.begin(), vc.bad_vertices.end(), 1) == 1);
  CHECK(vc.bad_vertices.size() == 2);
}

TEST_CASE("classification partitions edges and vertices") {
  SeededRng rng(31);
  GnpParams params(12, 0.4, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = sample_gnp(12, 0.4, rng.stream(trial));
    Classification c = classify(g, params);
    CHECK(c.good_edges.size() + c.bad_edges.size() ==
          static_cast<size_t>(g.edge_count()));
    CHECK(c.good_vertices.size() + c.bad_vertices.size() == 12);

    std::set<std::pair<int, int>> all_edges;
    for (const auto& e : c.good_edges) all_edges.insert(e);
    for (const auto& e : c.bad_edges) all_edges.insert(e);
    CHECK(all_edges.size() == static_cast<size_t>(g.edge_count()));
    for (const auto& [u, v] : all_edges) {
      CHECK(u < v);
      CHECK(g.has_edge(u, v));
    }
    CHECK(std::is_sorted(c.bad_edges.begin(), c.bad_edges.end()));
    CHECK(std::is_sorted(c.bad_vertices.begin(), c.bad_vertices.end()));
  }
}

TEST_CASE("decomposition identities on random graphs") {
  SeededRng rng(77);
  GnpParams params(10, 0.4, 0.5);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = sample_gnp(10, 0.4, rng.stream(trial));
    Decomposition d = decompose(g, params);
    SlowBuckets s = slow_decompose(g, params);

    CHECK(d.T == s.t);
    CHECK(d.T_prime == s.t_prime);
    CHECK(d.T0 == s.t0);
    CHECK(d.T1 == s.t1);
    CHECK(d.T2 == s.t2);
    CHECK(d.T3 == s.t3);

    // Covering inequality and the exact vertex-badness partition.
    CHECK(d.T <= d.T_prime + d.T0 + d.T1 + d.T2 + d.T3);
    CHECK(d.T == s.zero_bad_vertices + d.T1 + d.T2 + d.T3);
    CHECK(d.T0 <= s.zero_bad_vertices);
    CHECK(d.T == count_triangles(g));
  }
}

TEST_CASE("raising epsilon only improves edge goodness") {
  SeededRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = sample_gnp(11, 0.5, rng.stream(trial));
    GnpParams lo(11, 0.5, 0.2);
    GnpParams hi(11, 0.5, 0.8);
    Classification clo = classify(g, lo);
    Classification chi = classify(g, hi);
    std::set<std::pair<int, int>> lo_good(clo.good_edges.begin(), clo.good_edges.end());
    for (const auto& e : clo.good_edges)
      CHECK(std::find(chi.good_edges.begin(), chi.good_edges.end(), e) !=
            chi.good_edges.end());
    Decomposition dlo = decompose(g, lo);
    Decomposition dhi = decompose(g, hi);
    CHECK(dhi.T_prime >= dlo.T_prime);
    CHECK(dhi.T0 <= dlo.T0);
    // Vertex buckets ignore epsilon entirely.
    CHECK(dhi.T1 == dlo.T1);
    CHECK(dhi.T2 == dlo.T2);
    CHECK(dhi.T3 == dlo.T3);
  }
}

TEST_CASE("json projections carry the headline fields") {
  GnpParams params(6, 0.3, 1.0);
  Graph g = complete_graph(6);
  auto cj = classification_to_json(classify(g, params));
  CHECK(cj.contains("good_edges"));
  CHECK(cj.contains("bad_edges"));
  CHECK(cj.contains("bad_vertices"));
  CHECK(cj.contains("edge_threshold"));
  auto dj = decomposition_to_json(decompose(g, params));
  CHECK(dj.contains("T"));
  CHECK(dj.contains("T_prime"));
  CHECK(dj.contains("T0"));
  CHECK(dj.contains("T3"));
  CHECK(dj["T"].get<long long>() == 20);
}
