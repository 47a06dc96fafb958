#pragma once

#include <vector>

#include <json.hpp>

#include "tritail/graph.hpp"
#include "tritail/params.hpp"

namespace tritail {

// Good/bad split of the edges and vertices of one realization.
//
//   edge uv good    iff  (# triangles through uv) < epsilon * ell * n * p
//   vertex v good   iff  deg(v) < vertex_degree_constant * n * p
//
// Both comparisons are strict; hitting the threshold exactly is bad.
struct Classification {
  std::vector<VertexPair> good_edges;  // lexicographic
  std::vector<VertexPair> bad_edges;   // lexicographic
  std::vector<int> good_vertices;      // ascending
  std::vector<int> bad_vertices;       // ascending
  double edge_threshold = 0.0;
  double vertex_threshold = 0.0;
};

Classification classify(const Graph& g, const GnpParams& params);

// Split of the triangle count by the quality of the parts of each triangle.
//
//   T_prime : all three edges good
//   T0      : at least one bad edge, all three vertices good
//   T1      : exactly one bad vertex
//   T2      : exactly two bad vertices
//   T3      : all three vertices bad
//
// A triangle with a bad edge falls in T0 or in one of T1..T3 (or several of
// those overlap with T_prime), so T <= T_prime + T0 + T1 + T2 + T3 on every
// realization, and T equals (#triangles with zero bad vertices) + T1 + T2 + T3
// exactly.
struct Decomposition {
  long long T = 0;
  long long T_prime = 0;
  long long T0 = 0;
  long long T1 = 0;
  long long T2 = 0;
  long long T3 = 0;
  double edge_threshold = 0.0;
  double vertex_threshold = 0.0;
};

Decomposition decompose(const Graph& g, const GnpParams& params);

nlohmann::json classification_to_json(const Classification& c);
nlohmann::json decomposition_to_json(const Decomposition& d);

}  // namespace tritail
