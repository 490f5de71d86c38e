#include "chebroot/trig_reduce.hpp"

#include <cmath>
#include <string>

#include "chebroot/errors.hpp"

namespace chebroot {

TrigReduction reduce(const DepressedQuintic& dq) {
  if (!(dq.m < 0.0)) {
    throw MethodNotApplicable("trigonometric substitution needs m < 0 (m = " +
                              std::to_string(dq.m) + ")");
  }
  TrigReduction r;
  r.source = dq;
  r.u = 2.0 * std::sqrt(-dq.m / 5.0);
  const double u2 = r.u * r.u;
  const double u3 = u2 * r.u;
  const double u4 = u2 * u2;
  const double u5 = u4 * r.u;
  r.params.alpha = 16.0 * dq.n / u3;
  r.params.beta = 16.0 * dq.p / u4 - 5.0;
  r.params.gamma = 16.0 * dq.q / u5;
  return r;
}

double eval_f(const TrigParams& r, double theta) {
  const double c = std::cos(theta);
  return r.alpha * c * c + r.beta * c + std::cos(5.0 * theta) + r.gamma;
}

double eval_f_prime(const TrigParams& r, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return -2.0 * r.alpha * c * s - r.beta * s - 5.0 * std::sin(5.0 * theta);
}

BoundaryValues boundary_values(const TrigParams& r) {
  return {r.alpha + r.beta + 1.0 + r.gamma, r.alpha - r.beta - 1.0 + r.gamma};
}

double chebyshev_T5(double x) {
  const double x2 = x * x;
  return x * (5.0 + x2 * (-20.0 + 16.0 * x2));
}

double chebyshev_U4(double x) {
  const double x2 = x * x;
  return 1.0 + x2 * (-12.0 + 16.0 * x2);
}

}  // namespace chebroot
