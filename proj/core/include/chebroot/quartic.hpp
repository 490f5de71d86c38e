#ifndef CHEBROOT_QUARTIC_HPP
#define CHEBROOT_QUARTIC_HPP

#include <span>

#include "chebroot/classifier.hpp"
#include "chebroot/critical.hpp"
#include "chebroot/poly.hpp"

namespace chebroot {

/// t^4 + m t^2 + p t + q, from z^4 + a3 z^3 + ... through z = t - shift, shift = a3 / 4.
struct DepressedQuartic {
  double m = 0.0;
  double p = 0.0;
  double q = 0.0;
  double shift = 0.0;

  Poly as_poly() const { return Poly{q, p, m, 0.0, 1.0}; }
};

/// Coefficients a4..a0 in descending order, a4 != 0. Throws InvalidInput.
DepressedQuartic depress_quartic(std::span<const double> a4_to_a0, double snap_rel = 1e-12);

/// f4(theta) = a cos(theta) + cos(4 theta) + b.
struct QuarticParams {
  double a = 0.0;
  double b = 0.0;
};

/// t = u cos(theta) with u = sqrt(-m). Dividing P4(u cos theta) by u^4 / 8 and
/// subtracting 8c^4 - 8c^2 + 1 = cos 4theta leaves a = 8p/u^3, b = 8q/u^4 - 1,
/// so f4(theta) = (8 / u^4) P4(u cos theta).
struct QuarticReduction {
  double u = 0.0;
  QuarticParams params;
  DepressedQuartic source;
};

/// Throws MethodNotApplicable when m >= 0.
QuarticReduction reduce_quartic(double m, double p, double q);

double eval_f4(const QuarticParams& r, double theta);
/// f4'(theta) = -sin(theta) (a + 32x^3 - 16x), x = cos(theta).
double eval_f4_prime(const QuarticParams& r, double theta);

/// 32x^3 - 16x + a.
Poly quartic_critical_polynomial(const QuarticParams& r);
CriticalSet solve_critical_quartic(const QuarticParams& r);

/// n_real in {0, 2, 4} for distinct simple roots. Exterior indicators are
/// plus = [P4(u) < 0], minus = [P4(-u) < 0], certified by Sturm counts.
ClassificationReport classify_quartic(double m, double p, double q,
                                      const ClassifierConfig& cfg = {});
ClassificationReport classify_quartic(const DepressedQuartic& dq,
                                      const ClassifierConfig& cfg = {});

}  // namespace chebroot

#endif  // CHEBROOT_QUARTIC_HPP
