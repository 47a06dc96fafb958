#pragma once

#include <vector>

namespace tritail {

// All logs are natural.  Every exponent below is driven by L = log(1/p) one
// way or another, so a consistent log base matters.

struct BoundParams {
  double t;       // threshold
  double lambda;  // mean sum
  double a;       // localization constant
};

enum class BoundForm { sharp, weak };

// One evaluated tail bound.  log_bound keeps the raw exponent even when it is
// positive; prob_bound clamps to [0,1].  Trivial bounds (formula value >= 1,
// or a sharp form queried below its validity range t >= lambda) are flagged,
// not rejected: knowing a bound degenerates is part of the answer.
struct BoundResult {
  double log_bound = 0.0;
  double prob_bound = 1.0;
  BoundForm form = BoundForm::weak;
  bool trivial = false;
  BoundParams inputs{0.0, 0.0, 0.0};
};

struct ConcentrationBounds {
  BoundResult sharp;  // exp(-(t/a) (log(t/lambda) - 1 + lambda/t)), needs t >= lambda
  BoundResult weak;   // exp(-(t/a) log(t/(3 lambda))), any t > 0
};

// The two forms of the generic concentration estimate.
ConcentrationBounds concentration_bound(const BoundParams& bp);

// P(X >= t) <= e^{-t log(t/(3 lambda))} for X a sum with mean lambda.
BoundResult binomial_tail_bound(double t, double lambda);

// Tail of the triangle mass on an m-edge matching:
// P(t(A) >= t) <= exp(-(t/3) log(t/(3 m n p^2))).
BoundResult matching_tail_bound(double t, int m, int n, double p);

// Tail of the degree sum of an m-vertex set:
// P(d(A) >= t) <= exp(-(t/2) log(t/(6 n m p))).
BoundResult degree_tail_bound(double t, int n, int m, double p);

// I_p(x) = (x/2) log(x/p) + ((1-x)/2) log((1-x)/(1-p)).
double rate_function(double x, double p);

// Any graph with at least r triangles has at least (6r)^{2/3}/2 edges.
double min_edges_for_triangles(double r);

// For a real symmetric matrix: sum of squared entries vs |trace(M^3)|^{2/3}.
struct MatrixInequality {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};
MatrixInequality symmetric_matrix_inequality(const std::vector<std::vector<double>>& m);

// C(a,b) <= a^b/b! <= (a e / b)^b = e^{b + b log(a/b)}, for 1 <= b < a.
double binomial_coefficient_bound(int a, int b);

// Display envelopes e^{-C1 n^2 p^2 log(1/p)} <= P(T >= (1+eps)E[T]) <=
// e^{-C2 n^2 p^2} (and the sharper e^{-C3 n^2 p^2 log(1/p)}).  The constants
// are inputs: the source analysis leaves them unspecified, and fitting them
// here would fabricate ground truth.
struct TheoremEnvelope {
  double lower = 0.0;
  double upper_nolog = 0.0;
  double upper_main = 0.0;
};
TheoremEnvelope theorem_envelope(int n, double p, double epsilon, double c1, double c2, double c3);

// c = (lambda + eps n^3 p^3)/lambda with lambda = C(n,3) p^3, plus the sharp
// exponent factor log(c) - 1 + 1/c it induces.
struct ThresholdRatio {
  double lambda = 0.0;
  double c = 0.0;
  double factor = 0.0;
};
ThresholdRatio threshold_mean_ratio(int n, double p, double epsilon);

}  // namespace tritail
