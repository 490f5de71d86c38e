#ifndef CHEBROOT_TRIG_REDUCE_HPP
#define CHEBROOT_TRIG_REDUCE_HPP

#include "chebroot/poly.hpp"

namespace chebroot {

/// Parameters of f(theta) = alpha cos^2(theta) + beta cos(theta) + cos(5 theta) + gamma.
/// They fully determine the interior zero structure, with or without a source quintic.
struct TrigParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Substitution t = u cos(theta) applied to a depressed quintic with m < 0.
///
/// u = 2 sqrt(-m / 5) makes the cos^3 coefficient match T5, leaving
///   alpha = 16 n / u^3,  beta = 16 p / u^4 - 5,  gamma = 16 q / u^5
/// and f(theta) = (16 / u^5) P(u cos theta) for every theta.
struct TrigReduction {
  double u = 0.0;
  TrigParams params;
  DepressedQuintic source;

  double alpha() const { return params.alpha; }
  double beta() const { return params.beta; }
  double gamma() const { return params.gamma; }
};

/// Throws MethodNotApplicable when m >= 0.
TrigReduction reduce(const DepressedQuintic& dq);

double eval_f(const TrigParams& r, double theta);
inline double eval_f(const TrigReduction& r, double theta) { return eval_f(r.params, theta); }

/// f'(theta) = -2 alpha cos sin - beta sin - 5 sin(5 theta).
double eval_f_prime(const TrigParams& r, double theta);

struct BoundaryValues {
  double f0 = 0.0;   // alpha + beta + 1 + gamma, same sign as P(u)
  double fpi = 0.0;  // alpha - beta - 1 + gamma, same sign as P(-u)
};

BoundaryValues boundary_values(const TrigParams& r);
inline BoundaryValues boundary_values(const TrigReduction& r) { return boundary_values(r.params); }

/// T5(x) = 16x^5 - 20x^3 + 5x, so T5(cos t) = cos 5t.
double chebyshev_T5(double x);
/// U4(x) = 16x^4 - 12x^2 + 1, so sin 5t = sin t * U4(cos t).
double chebyshev_U4(double x);

}  // namespace chebroot

#endif  // CHEBROOT_TRIG_REDUCE_HPP
