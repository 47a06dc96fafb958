#include "tritail/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tritail {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::invalid_argument(std::string("bounds: ") + name + " must be finite and > 0");
}

BoundResult make_result(double log_bound, BoundForm form, BoundParams inputs) {
  BoundResult r;
  r.log_bound = log_bound;
  r.prob_bound = log_bound >= 0.0 ? 1.0 : std::exp(log_bound);
  r.form = form;
  r.trivial = log_bound >= 0.0;
  r.inputs = inputs;
  return r;
}

}  // namespace

ConcentrationBounds concentration_bound(const BoundParams& bp) {
  require_positive(bp.t, "t");
  require_positive(bp.lambda, "lambda");
  require_positive(bp.a, "a");

  ConcentrationBounds out;
  if (bp.t >= bp.lambda) {
    double factor = std::log(bp.t / bp.lambda) - 1.0 + bp.lambda / bp.t;
    out.sharp = make_result(-(bp.t / bp.a) * factor, BoundForm::sharp, bp);
  } else {
    // Sharp form is only claimed for t >= lambda; report the trivial bound.
    out.sharp = make_result(0.0, BoundForm::sharp, bp);
    out.sharp.trivial = true;
  }
  out.weak = make_result(-(bp.t / bp.a) * std::log(bp.t / (3.0 * bp.lambda)), BoundForm::weak, bp);
  return out;
}

BoundResult binomial_tail_bound(double t, double lambda) {
  require_positive(t, "t");
  require_positive(lambda, "lambda");
  return make_result(-t * std::log(t / (3.0 * lambda)), BoundForm::weak, {t, lambda, 1.0});
}

BoundResult matching_tail_bound(double t, int m, int n, double p) {
  require_positive(t, "t");
  if (m < 1) throw std::invalid_argument("matching_tail_bound: matching size must be >= 1");
  if (n < 1) throw std::invalid_argument("matching_tail_bound: n must be >= 1");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("matching_tail_bound: p must lie in (0,1)");
  double lambda = static_cast<double>(m) * n * p * p;
  return make_result(-(t / 3.0) * std::log(t / (3.0 * lambda)), BoundForm::weak, {t, lambda, 3.0});
}

BoundResult degree_tail_bound(double t, int n, int m, double p) {
  require_positive(t, "t");
  if (m < 1) throw std::invalid_argument("degree_tail_bound: set size must be >= 1");
  if (n < 1) throw std::invalid_argument("degree_tail_bound: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("degree_tail_bound: p must lie in (0,1)");
  // Mean-sum parameter is n*m*p; the denominator 6 n m p folds in the doubling
  // d(A) <= 2 Y and the factor 3 from the generic weak form.
  double lambda = static_cast<double>(n) * m * p;
  return make_result(-(t / 2.0) * std::log(t / (6.0 * lambda)), BoundForm::weak, {t, lambda, 2.0});
}

double rate_function(double x, double p) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("rate_function: x must lie in (0,1)");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("rate_function: p must lie in (0,1)");
  return 0.5 * x * std::log(x / p) + 0.5 * (1.0 - x) * std::log((1.0 - x) / (1.0 - p));
}

double min_edges_for_triangles(double r) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::invalid_argument("min_edges_for_triangles: r must be finite and >= 0");
  return 0.5 * std::pow(6.0 * r, 2.0 / 3.0);
}

MatrixInequality symmetric_matrix_inequality(const std::vector<std::vector<double>>& m) {
  const std::size_t d = m.size();
  for (const auto& row : m)
    if (row.size() != d)
      throw std::invalid_argument("symmetric_matrix_inequality: matrix must be square");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (m[i][j] != m[j][i])
        throw std::invalid_argument("symmetric_matrix_inequality: matrix must be symmetric");

  MatrixInequality out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.lhs += m[i][j] * m[i][j];

  double trace3 = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (m[i][j] == 0.0) continue;
      for (std::size_t k = 0; k < d; ++k) trace3 += m[i][j] * m[j][k] * m[k][i];
    }
  out.rhs = std::pow(std::abs(trace3), 2.0 / 3.0);
  out.holds = out.lhs >= out.rhs - 1e-9 * std::max(1.0, out.rhs);
  return out;
}

double binomial_coefficient_bound(int a, int b) {
  if (b < 1) throw std::invalid_argument("binomial_coefficient_bound: b must be >= 1");
  if (b >= a) throw std::invalid_argument("binomial_coefficient_bound: need b < a");
  double db = b;
  return std::exp(db + db * std::log(static_cast<double>(a) / db));
}

TheoremEnvelope theorem_envelope(int n, double p, double epsilon, double c1, double c2,
                                 double c3) {
  if (n < 1) throw std::invalid_argument("theorem_envelope: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("theorem_envelope: p must lie in (0,1)");
  if (!(epsilon > 0.0)) throw std::invalid_argument("theorem_envelope: epsilon must be > 0");
  require_positive(c1, "C1");
  require_positive(c2, "C2");
  require_positive(c3, "C3");
  double n2p2 = static_cast<double>(n) * n * p * p;
  double L = std::log(1.0 / p);
  TheoremEnvelope env;
  env.lower = std::exp(-c1 * n2p2 * L);
  env.upper_nolog = std::exp(-c2 * n2p2);
  env.upper_main = std::exp(-c3 * n2p2 * L);
  return env;
}

ThresholdRatio threshold_mean_ratio(int n, double p, double epsilon) {
  if (n < 3) throw std::invalid_argument("threshold_mean_ratio: n must be >= 3");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("threshold_mean_ratio: p must lie in (0,1)");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("threshold_mean_ratio: epsilon must be >= 0");
  ThresholdRatio out;
  double c3 = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
  out.lambda = c3 * p * p * p;
  double n3p3 = static_cast<double>(n) * n * n * p * p * p;
  out.c = (out.lambda + epsilon * n3p3) / out.lambda;
  out.factor = std::log(out.c) - 1.0 + 1.0 / out.c;
  return out;
}

}  // namespace tritail
