#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "tritail/graph.hpp"
#include "tritail/params.hpp"

namespace tritail {

// Localized surrogate family for one center triplet uvw.
//
// For every triplet xyz (lexicographic order over x < y < z):
//   Y_xyz    = 1{xyz is a triangle}
//   X_xyz    = 1{xyz is a triangle with all three edges good}
//   X'_xyz   = Y_xyz
//   X_loc    = X_{xyz(uvw)}, built so that it never depends on the three
//              center edges uv, vw, uw:
//     - xyz disjoint from the center: X_loc = X_xyz
//     - xyz shares exactly one vertex: relabel so the shared vertex plays the
//       role of x and the center's other two vertices are {v', w'}; then
//       X_loc = Y_xyz * Z_yz * E_y * E_z with
//         T_y = #triangles xyr with r outside {v', w'}
//         N_y = #neighbors of y inside {v', w'}
//         E_y = 1{N_y + T_y < eps * ell * n * p}    (E_z analogous)
//     - xyz shares two or more vertices (including the center itself):
//       X_loc = 0
struct LocalizedFamily {
  std::array<int, 3> center{};
  double a_const = 0.0;  // 3 * eps * ell * n * p
  std::vector<std::array<int, 3>> triplets;
  std::vector<char> shared;        // |triplet ∩ center| per triplet
  std::vector<char> x_vals;        // X
  std::vector<char> x_prime_vals;  // X' = Y
  std::vector<char> x_loc_vals;    // X_{xyz(center)}
};

LocalizedFamily build_localized(const Graph& g, const GnpParams& params,
                                const std::array<int, 3>& center);

// Per-realization checks of the concentration conditions for one center:
//   (a) X <= X' pointwise
//   (c) X_loc <= X pointwise
//   (d) if X_center = 1 then sum X <= a_const + sum X_loc
// Condition (b) is distributional; see check_independence.  Two byproducts of
// the proof are also checked: when X_center = 1 the number of triangles
// sharing >= 2 vertices with the center is at most a_const, and for one-shared
// triplets the triangle count of the edge xy never exceeds N_y + T_y.
struct ConditionReport {
  bool a_holds = true;
  bool c_holds = true;
  bool d_holds = true;
  bool d_vacuous = true;  // X_center = 0
  bool k2_triangle_bound_holds = true;
  long long k2_triangles = 0;
  long long sum_x = 0;
  long long sum_x_prime = 0;
  long long sum_x_loc = 0;
  double a_const = 0.0;
  // max over one-shared triplets and both non-shared roles of
  // (#triangles containing the shared-vertex edge) - (N + T); always <= 0.
  long long edge_triangle_count_excess = 0;
};

ConditionReport check_conditions(const Graph& g, const GnpParams& params,
                                 const std::array<int, 3>& center);

// Exact distributional check of condition (b) at n <= 5: enumerate all graphs,
// accumulate the joint law of (X'_center, S = sum X_loc), and report
// max |P(X'=b, S=s) - P(X'=b) P(S=s)|.  The flip test toggles each center edge
// on every enumerated graph and confirms no X_loc value moves.
struct IndependenceReport {
  double max_gap = 0.0;
  bool flip_clean = true;
  long long flip_violations = 0;
};

IndependenceReport check_independence(int n, double p, double epsilon,
                                      const std::array<int, 3>& center,
                                      double vertex_degree_constant = 7.0);

nlohmann::json condition_report_to_json(const ConditionReport& r);
nlohmann::json independence_report_to_json(const IndependenceReport& r);

}  // namespace tritail
