#pragma once

#include <cmath>
#include <stdexcept>

namespace tritail {

// Parameters of one upper-tail instance: G(n,p) and the excess factor epsilon,
// i.e. we study P(T >= (1+epsilon) * E[T]) for the triangle count T.
//
// Derived quantities used throughout:
//   L    = log(1/p)
//   ell  = 1/L
//   edge_threshold   = epsilon * ell * n * p   (an edge uv is "good" iff the
//                      number of triangles through uv is strictly below this)
//   vertex_threshold = vertex_degree_constant * n * p  (a vertex is "good" iff
//                      its degree is strictly below this)
struct GnpParams {
  int n;
  double p;
  double epsilon;
  double vertex_degree_constant;

  double L;
  double ell;
  double edge_threshold;
  double vertex_threshold;

  GnpParams(int n_, double p_, double epsilon_, double vertex_degree_constant_ = 7.0)
      : n(n_), p(p_), epsilon(epsilon_), vertex_degree_constant(vertex_degree_constant_) {
    if (n < 1) throw std::invalid_argument("GnpParams: n must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("GnpParams: p must lie in (0,1)");
    if (!(epsilon > 0.0)) throw std::invalid_argument("GnpParams: epsilon must be > 0");
    if (!(vertex_degree_constant > 0.0))
      throw std::invalid_argument("GnpParams: vertex_degree_constant must be > 0");
    L = std::log(1.0 / p);
    ell = 1.0 / L;
    edge_threshold = epsilon * ell * n * p;
    vertex_threshold = vertex_degree_constant * n * p;
  }

  // E[T] = C(n,3) p^3.
  double expected_triangles() const {
    double c3 = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
    return c3 * p * p * p;
  }

  // The tail threshold (1+epsilon) E[T].
  double tail_threshold() const { return (1.0 + epsilon) * expected_triangles(); }
};

}  // namespace tritail
