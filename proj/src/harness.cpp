#include "tritail/harness.hpp"

#include <algorithm>
#include <stdexcept>

#include "tritail/enumerate.hpp"

namespace tritail {

namespace {

void check_center(int n, const std::array<int, 3>& center) {
  for (int v : center)
    if (v < 0 || v >= n) throw std::invalid_argument("harness: center vertex out of range");
  if (center[0] == center[1] || center[0] == center[2] || center[1] == center[2])
    throw std::invalid_argument("harness: center vertices must be distinct");
}

struct PairTables {
  int n = 0;
  std::vector<int> t;     // common-neighbor counts, all pairs
  std::vector<char> z;    // good-edge indicator (0 for non-edges)
  const Graph* g = nullptr;

  int tt(int u, int v) const { return t[static_cast<std::size_t>(u) * n + v]; }
  bool zz(int u, int v) const { return z[static_cast<std::size_t>(u) * n + v]; }
  bool edge(int u, int v) const { return g->has_edge(u, v); }
};

PairTables build_tables(const Graph& g, const GnpParams& params) {
  PairTables pt;
  pt.n = g.n();
  pt.g = &g;
  pt.t.assign(static_cast<std::size_t>(pt.n) * pt.n, 0);
  pt.z.assign(static_cast<std::size_t>(pt.n) * pt.n, 0);
  for (int u = 0; u < pt.n; ++u)
    for (int v = u + 1; v < pt.n; ++v) {
      int t = g.common_neighbors(u, v);
      pt.t[static_cast<std::size_t>(u) * pt.n + v] = t;
      pt.t[static_cast<std::size_t>(v) * pt.n + u] = t;
      char good = g.has_edge(u, v) && t < params.edge_threshold;
      pt.z[static_cast<std::size_t>(u) * pt.n + v] = good;
      pt.z[static_cast<std::size_t>(v) * pt.n + u] = good;
    }
  return pt;
}

}  // namespace

LocalizedFamily build_localized(const Graph& g, const GnpParams& params,
                                const std::array<int, 3>& center) {
  if (g.n() != params.n)
    throw std::invalid_argument("build_localized: graph order does not match params.n");
  check_center(g.n(), center);

  const int n = g.n();
  PairTables pt = build_tables(g, params);

  LocalizedFamily fam;
  fam.center = center;
  std::sort(fam.center.begin(), fam.center.end());
  fam.a_const = 3.0 * params.edge_threshold;

  auto in_center = [&](int v) {
    return v == fam.center[0] || v == fam.center[1] || v == fam.center[2];
  };

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        char y_ind = pt.edge(x, y) && pt.edge(x, z) && pt.edge(y, z);
        char x_ind = pt.zz(x, y) && pt.zz(x, z) && pt.zz(y, z);
        int shared = in_center(x) + in_center(y) + in_center(z);

        char loc = 0;
        if (shared == 0) {
          loc = x_ind;
        } else if (shared == 1) {
          // Shared vertex takes the x role; vp/wp are the center's others.
          int sx = in_center(x) ? x : (in_center(y) ? y : z);
          int ry = x == sx ? y : x;
          int rz = z == sx ? y : z;
          int vp = -1, wp = -1;
          for (int cv : fam.center) {
            if (cv == sx) continue;
            (vp < 0 ? vp : wp) = cv;
          }
          auto e_ind = [&](int yy) {
            int ny = pt.edge(yy, vp) + pt.edge(yy, wp);
            int ty = 0;
            if (pt.edge(sx, yy))
              ty = pt.tt(sx, yy) - (pt.edge(sx, vp) && pt.edge(yy, vp)) -
                   (pt.edge(sx, wp) && pt.edge(yy, wp));
            return ny + ty < params.edge_threshold;
          };
          loc = y_ind && pt.zz(ry, rz) && e_ind(ry) && e_ind(rz);
        }
        fam.triplets.push_back({x, y, z});
        fam.shared.push_back(static_cast<char>(shared));
        fam.x_vals.push_back(x_ind);
        fam.x_prime_vals.push_back(y_ind);
        fam.x_loc_vals.push_back(loc);
      }
  return fam;
}

ConditionReport check_conditions(const Graph& g, const GnpParams& params,
                                 const std::array<int, 3>& center) {
  LocalizedFamily fam = build_localized(g, params, center);
  PairTables pt = build_tables(g, params);

  ConditionReport rep;
  rep.a_const = fam.a_const;

  char x_center = 0;
  for (std::size_t i = 0; i < fam.triplets.size(); ++i) {
    const auto& t = fam.triplets[i];
    if (t[0] == fam.center[0] && t[1] == fam.center[1] && t[2] == fam.center[2])
      x_center = fam.x_vals[i];
    if (fam.x_vals[i] > fam.x_prime_vals[i]) rep.a_holds = false;
    if (fam.x_loc_vals[i] > fam.x_vals[i]) rep.c_holds = false;
    rep.sum_x += fam.x_vals[i];
    rep.sum_x_prime += fam.x_prime_vals[i];
    rep.sum_x_loc += fam.x_loc_vals[i];
    if (fam.shared[i] >= 2 && fam.x_prime_vals[i]) ++rep.k2_triangles;
  }

  rep.d_vacuous = x_center == 0;
  if (!rep.d_vacuous) {
    rep.d_holds = static_cast<double>(rep.sum_x) <= rep.a_const + rep.sum_x_loc;
    rep.k2_triangle_bound_holds = static_cast<double>(rep.k2_triangles) <= rep.a_const;
  }

  // Count bound behind condition (c): for a one-shared triplet relabeled with
  // shared vertex s, the triangles through edge (s,y) number at most N_y + T_y.
  rep.edge_triangle_count_excess = -1000000;
  auto in_center = [&](int v) {
    return v == fam.center[0] || v == fam.center[1] || v == fam.center[2];
  };
  for (std::size_t i = 0; i < fam.triplets.size(); ++i) {
    if (fam.shared[i] != 1) continue;
    const auto& t = fam.triplets[i];
    int sx = in_center(t[0]) ? t[0] : (in_center(t[1]) ? t[1] : t[2]);
    int vp = -1, wp = -1;
    for (int cv : fam.center) {
      if (cv == sx) continue;
      (vp < 0 ? vp : wp) = cv;
    }
    for (int role : t) {
      if (role == sx) continue;
      long long tri_on_edge = pt.edge(sx, role) ? pt.tt(sx, role) : 0;
      long long ny = pt.edge(role, vp) + pt.edge(role, wp);
      long long ty = 0;
      if (pt.edge(sx, role))
        ty = pt.tt(sx, role) - (pt.edge(sx, vp) && pt.edge(role, vp)) -
             (pt.edge(sx, wp) && pt.edge(role, wp));
      rep.edge_triangle_count_excess =
          std::max(rep.edge_triangle_count_excess, tri_on_edge - (ny + ty));
    }
  }
  if (rep.edge_triangle_count_excess == -1000000) rep.edge_triangle_count_excess = 0;
  return rep;
}

IndependenceReport check_independence(int n, double p, double epsilon,
                                      const std::array<int, 3>& center,
                                      double vertex_degree_constant) {
  if (n > 5) throw std::invalid_argument("check_independence: n must be <= 5");
  GnpParams params(n, p, epsilon, vertex_degree_constant);
  check_center(n, center);

  const int pairs = pair_count(n);
  const int max_s = n * (n - 1) * (n - 2) / 6;
  std::array<int, 3> c = center;
  std::sort(c.begin(), c.end());

  // Joint law of (X'_center, S).
  std::vector<double> joint(2 * (max_s + 1), 0.0);
  IndependenceReport rep;

  enumerate_graphs(n, [&](const Graph& g, int edges, std::uint64_t) {
    double w = gnp_graph_weight(edges, pairs, p);
    LocalizedFamily fam = build_localized(g, params, c);
    int xp = 0;
    long long s = 0;
    for (std::size_t i = 0; i < fam.triplets.size(); ++i) {
      s += fam.x_loc_vals[i];
      const auto& t = fam.triplets[i];
      if (t[0] == c[0] && t[1] == c[1] && t[2] == c[2]) xp = fam.x_prime_vals[i];
    }
    joint[static_cast<std::size_t>(xp) * (max_s + 1) + s] += w;

    // Flip test: the localized values must ignore the center edges.
    Graph flipped = g;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        flipped.toggle_edge(c[a], c[b]);
        LocalizedFamily fam2 = build_localized(flipped, params, c);
        if (fam2.x_loc_vals != fam.x_loc_vals) ++rep.flip_violations;
        flipped.toggle_edge(c[a], c[b]);
      }
  });

  rep.flip_clean = rep.flip_violations == 0;

  std::array<double, 2> pb{};
  std::vector<double> ps(max_s + 1, 0.0);
  for (int b = 0; b < 2; ++b)
    for (int s = 0; s <= max_s; ++s) {
      pb[b] += joint[static_cast<std::size_t>(b) * (max_s + 1) + s];
      ps[s] += joint[static_cast<std::size_t>(b) * (max_s + 1) + s];
    }
  for (int b = 0; b < 2; ++b)
    for (int s = 0; s <= max_s; ++s) {
      double gap =
          std::abs(joint[static_cast<std::size_t>(b) * (max_s + 1) + s] - pb[b] * ps[s]);
      rep.max_gap = std::max(rep.max_gap, gap);
    }
  return rep;
}

nlohmann::json condition_report_to_json(const ConditionReport& r) {
  return nlohmann::json{{"a_holds", r.a_holds},
                        {"c_holds", r.c_holds},
                        {"d_holds", r.d_holds},
                        {"d_vacuous", r.d_vacuous},
                        {"k2_triangle_bound_holds", r.k2_triangle_bound_holds},
                        {"k2_triangles", r.k2_triangles},
                        {"sum_x", r.sum_x},
                        {"sum_x_prime", r.sum_x_prime},
                        {"sum_x_loc", r.sum_x_loc},
                        {"a_const", r.a_const},
                        {"edge_triangle_count_excess", r.edge_triangle_count_excess}};
}

nlohmann::json independence_report_to_json(const IndependenceReport& r) {
  return nlohmann::json{{"max_gap", r.max_gap},
                        {"flip_clean", r.flip_clean},
                        {"flip_violations", r.flip_violations}};
}

}  // namespace tritail
