#include "tritail/classify.hpp"

namespace tritail {

namespace {

std::vector<char> vertex_goodness(const Graph& g, const GnpParams& params) {
  std::vector<char> good(g.n());
  for (int v = 0; v < g.n(); ++v) good[v] = g.degree(v) < params.vertex_threshold;
  return good;
}

}  // namespace

Classification classify(const Graph& g, const GnpParams& params) {
  if (g.n() != params.n)
    throw std::invalid_argument("classify: graph order does not match params.n");
  Classification c;
  c.edge_threshold = params.edge_threshold;
  c.vertex_threshold = params.vertex_threshold;

  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) continue;
      if (g.common_neighbors(u, v) < params.edge_threshold)
        c.good_edges.emplace_back(u, v);
      else
        c.bad_edges.emplace_back(u, v);
    }

  std::vector<char> good = vertex_goodness(g, params);
  for (int v = 0; v < g.n(); ++v) (good[v] ? c.good_vertices : c.bad_vertices).push_back(v);
  return c;
}

Decomposition decompose(const Graph& g, const GnpParams& params) {
  if (g.n() != params.n)
    throw std::invalid_argument("decompose: graph order does not match params.n");
  const int n = g.n();
  Decomposition d;
  d.edge_threshold = params.edge_threshold;
  d.vertex_threshold = params.vertex_threshold;

  std::vector<char> vertex_good = vertex_goodness(g, params);

  // Edge goodness for present edges, flat upper-triangle table.
  std::vector<char> edge_good(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v))
        edge_good[static_cast<std::size_t>(u) * n + v] =
            g.common_neighbors(u, v) < params.edge_threshold;

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (int w = v + 1; w < n; ++w) {
        if (!g.has_edge(u, w) || !g.has_edge(v, w)) continue;
        ++d.T;
        int good_edges = edge_good[static_cast<std::size_t>(u) * n + v] +
                         edge_good[static_cast<std::size_t>(u) * n + w] +
                         edge_good[static_cast<std::size_t>(v) * n + w];
        int bad_vertices = (!vertex_good[u]) + (!vertex_good[v]) + (!vertex_good[w]);
        if (good_edges == 3) ++d.T_prime;
        if (good_edges < 3 && bad_vertices == 0) ++d.T0;
        if (bad_vertices == 1) ++d.T1;
        if (bad_vertices == 2) ++d.T2;
        if (bad_vertices == 3) ++d.T3;
      }
    }
  return d;
}

nlohmann::json classification_to_json(const Classification& c) {
  nlohmann::json j;
  auto pairs = [](const std::vector<VertexPair>& es) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [u, v] : es) arr.push_back({u, v});
    return arr;
  };
  j["good_edges"] = pairs(c.good_edges);
  j["bad_edges"] = pairs(c.bad_edges);
  j["good_vertices"] = c.good_vertices;
  j["bad_vertices"] = c.bad_vertices;
  j["edge_threshold"] = c.edge_threshold;
  j["vertex_threshold"] = c.vertex_threshold;
  return j;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  return nlohmann::json{{"T", d.T},           {"T_prime", d.T_prime},
                        {"T0", d.T0},         {"T1", d.T1},
                        {"T2", d.T2},         {"T3", d.T3},
                        {"edge_threshold", d.edge_threshold},
                        {"vertex_threshold", d.vertex_threshold}};
}

}  // namespace tritail
