#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "tritail/classify.hpp"
#include "tritail/harness.hpp"
#include "tritail/rng.hpp"

using namespace tritail;

namespace {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Independent recomputation of the one-shared-vertex surrogate for triplet
// {sx, y, z} (sx in the center, y and z outside), written from the definition
// with plain loops.
char slow_one_shared(const Graph& g, const GnpParams& params, int sx, int y, int z,
                     const std::array<int, 3>& center) {
  std::vector<int> others;
  for (int c : center)
    if (c != sx) others.push_back(c);

  if (!(g.has_edge(sx, y) && g.has_edge(sx, z) && g.has_edge(y, z))) return 0;
  // Z_yz: the outside edge is good.
  if (static_cast<double>(g.common_neighbors(y, z)) >= params.edge_threshold) return 0;

  for (int w : {y, z}) {
    int nw = 0;
    for (int o : others)
      if (g.has_edge(w, o)) ++nw;
    int tw = 0;
    for (int r = 0; r < g.n(); ++r) {
      if (r == sx || r == w) continue;
      if (std::find(others.begin(), others.end(), r) != others.end()) continue;
      if (g.has_edge(sx, r) && g.has_edge(w, r)) ++tw;
    }
    if (static_cast<double>(nw + tw) >= params.edge_threshold) return 0;
  }
  return 1;
}

}  // namespace

TEST_CASE("family layout and basic fixtures") {
  GnpParams params(5, 0.5, 1.0);
  Graph g(5);
  LocalizedFamily fam = build_localized(g, params, {2, 0, 1});
  CHECK(fam.center == std::array<int, 3>{0, 1, 2});
  CHECK(fam.triplets.size() == 10);  // C(5,3)
  CHECK(fam.a_const == doctest::Approx(3.0 * params.edge_threshold).epsilon(1e-12));
  // Empty graph: everything zero.
  for (size_t i = 0; i < fam.triplets.size(); ++i) {
    CHECK(fam.x_vals[i] == 0);
    CHECK(fam.x_prime_vals[i] == 0);
    CHECK(fam.x_loc_vals[i] == 0);
  }
  // Triplets come out sorted lexicographically with shared counts in order.
  CHECK(std::is_sorted(fam.triplets.begin(), fam.triplets.end()));

  CHECK_THROWS_AS(build_localized(g, params, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_localized(g, params, {0, 1, 5}), std::invalid_argument);
}

TEST_CASE("single triangle: the center's own surrogate is zeroed") {
  GnpParams params(3, 0.5, 1.0);
  Graph k3 = complete_graph(3);
  LocalizedFamily fam = build_localized(k3, params, {0, 1, 2});
  REQUIRE(fam.triplets.size() == 1);
  CHECK(fam.shared[0] == 3);
  CHECK(fam.x_prime_vals[0] == 1);
  CHECK(fam.x_vals[0] == 1);  // all edges good at this threshold
  CHECK(fam.x_loc_vals[0] == 0);
}

TEST_CASE("hand-traced one-shared triplet on K5") {
  // K5, center {0,1,2}, triplet {0,3,4}: every t_uv = 3.  With eps = 1,
  // p = 0.5 the edge threshold is ~3.61, all edges good, and for the triplet
  // N = 2 (3 and 4 each see both of {1,2}) and T = 1, so N + T = 3 < 3.61.
  Graph k5 = complete_graph(5);
  GnpParams loose(5, 0.5, 1.0);
  LocalizedFamily fam = build_localized(k5, loose, {0, 1, 2});
  auto find = [&](std::array<int, 3> t) {
    auto it = std::find(fam.triplets.begin(), fam.triplets.end(), t);
    REQUIRE(it != fam.triplets.end());
    return static_cast<size_t>(it - fam.triplets.begin());
  };
  size_t i = find({0, 3, 4});
  CHECK(fam.shared[i] == 1);
  CHECK(fam.x_vals[i] == 1);
  CHECK(fam.x_loc_vals[i] == 1);

  // Tighter eps = 0.5: threshold ~1.80, every edge is bad (t_uv = 3), X = 0
  // everywhere and the surrogate for {0,3,4} dies with Z_34.
  GnpParams tight(5, 0.5, 0.5);
  LocalizedFamily tfam = build_localized(k5, tight, {0, 1, 2});
  for (size_t j = 0; j < tfam.triplets.size(); ++j) CHECK(tfam.x_vals[j] == 0);
  CHECK(tfam.x_loc_vals[find({0, 3, 4})] == 0);

  // Two-shared triplets are always zero.
  CHECK(tfam.x_loc_vals[find({0, 1, 3})] == 0);
  CHECK(fam.x_loc_vals[find({0, 1, 3})] == 0);
}

TEST_CASE("surrogates match a from-scratch recomputation") {
  SeededRng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 7 + static_cast<int>(rng.next_u64() % 3);  // 7..9
    double p = 0.3 + 0.2 * (trial % 3);
    GnpParams params(n, p, 0.4 + 0.3 * (trial % 2));
    Graph g = sample_gnp(n, p, rng.stream(trial));
    std::array<int, 3> center = {0, 2, n - 1};
    LocalizedFamily fam = build_localized(g, params, center);
    Classification cls = classify(g, params);
    std::set<VertexPair> good(cls.good_edges.begin(), cls.good_edges.end());

    for (size_t i = 0; i < fam.triplets.size(); ++i) {
      auto [x, y, z] = fam.triplets[i];
      bool tri = g.has_edge(x, y) && g.has_edge(x, z) && g.has_edge(y, z);
      CHECK(fam.x_prime_vals[i] == (tri ? 1 : 0));
      bool allgood = tri && good.count({x, y}) && good.count({x, z}) && good.count({y, z});
      CHECK(fam.x_vals[i] == (allgood ? 1 : 0));

      int in_center = 0;
      for (int c : center)
        in_center += (x == c) + (y == c) + (z == c);
      CHECK(fam.shared[i] == in_center);

      if (in_center == 0) {
        CHECK(fam.x_loc_vals[i] == fam.x_vals[i]);
      } else if (in_center >= 2) {
        CHECK(fam.x_loc_vals[i] == 0);
      } else {
        int sx = -1;
        std::vector<int> outside;
        for (int v : {x, y, z}) {
          if (std::find(center.begin(), center.end(), v) != center.end())
            sx = v;
          else
            outside.push_back(v);
        }
        REQUIRE(sx >= 0);
        REQUIRE(outside.size() == 2);
        CHECK(fam.x_loc_vals[i] ==
              slow_one_shared(g, params, sx, outside[0], outside[1], center));
      }
    }
  }
}

TEST_CASE("conditions hold across random graphs and all centers") {
  SeededRng rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 8;
    double p = 0.35 + 0.15 * (trial % 3);
    GnpParams params(n, p, 0.3 + 0.4 * (trial % 2));
    Graph g = sample_gnp(n, p, rng.stream(trial));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          ConditionReport rep = check_conditions(g, params, {a, b, c});
          CHECK(rep.a_holds);
          CHECK(rep.c_holds);
          CHECK(rep.d_holds);
          CHECK(rep.k2_triangle_bound_holds);
          CHECK(rep.edge_triangle_count_excess <= 0);
          CHECK(rep.sum_x <= rep.sum_x_prime);
          CHECK(rep.sum_x_loc <= rep.sum_x);
        }
  }
}

TEST_CASE("condition (d) bites when the center is a triangle") {
  // On K6 with a generous threshold X_center = 1, so (d) is non-vacuous and
  // the two-shared triangle count must stay within a_const.
  Graph k6 = complete_graph(6);
  GnpParams params(6, 0.5, 2.0);  // edge threshold ~8.66, all edges good
  ConditionReport rep = check_conditions(k6, params, {0, 1, 2});
  CHECK_FALSE(rep.d_vacuous);
  CHECK(rep.d_holds);
  CHECK(rep.sum_x == 20);
  CHECK(rep.sum_x_prime == 20);
  // Triangles sharing >= 2 vertices with the center: 3 per center pair plus
  // the center itself = 3*4 + ... on K6: pairs {0,1},{0,2},{1,2} each form
  // triangles with the 3 outside vertices, plus triangle 012: 10 total.
  CHECK(rep.k2_triangles == 10);
  CHECK(rep.k2_triangle_bound_holds);
  CHECK(static_cast<double>(rep.k2_triangles) <= rep.a_const);
}

TEST_CASE("exact independence of the surrogate family from center edges") {
  // Joint law factorizes to machine precision, and toggling center edges
  // never moves a surrogate value.
  for (auto [n, p] : {std::pair{4, 0.5}, std::pair{4, 0.3}, std::pair{5, 0.6}}) {
    IndependenceReport rep = check_independence(n, p, 1.0, {0, 1, 2});
    CHECK(rep.max_gap <= 1e-12);
    CHECK(rep.flip_clean);
    CHECK(rep.flip_violations == 0);
  }
  // Tighter epsilon exercises nontrivial goodness cuts.
  IndependenceReport tight = check_independence(5, 0.5, 0.25, {0, 1, 3});
  CHECK(tight.max_gap <= 1e-12);
  CHECK(tight.flip_clean);

  CHECK(check_independence(3, 0.5, 1.0, {0, 1, 2}).max_gap <= 1e-15);
  CHECK_THROWS_AS(check_independence(6, 0.5, 1.0, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("report serialization") {
  Graph k4 = complete_graph(4);
  GnpParams params(4, 0.5, 1.0);
  auto cj = condition_report_to_json(check_conditions(k4, params, {0, 1, 2}));
  CHECK(cj.contains("a_holds"));
  CHECK(cj.contains("d_holds"));
  CHECK(cj.contains("sum_x_loc"));
  auto ij = independence_report_to_json(check_independence(4, 0.5, 1.0, {0, 1, 2}));
  CHECK(ij.contains("max_gap"));
  CHECK(ij.contains("flip_clean"));
}
