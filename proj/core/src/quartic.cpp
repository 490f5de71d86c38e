#include "chebroot/quartic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chebroot/errors.hpp"
#include "report_assembly.hpp"

namespace chebroot {

DepressedQuartic depress_quartic(std::span<const double> a4_to_a0, double snap_rel) {
  if (a4_to_a0.size() != 5) throw InvalidInput("a quartic needs exactly five coefficients");
  for (double v : a4_to_a0)
    if (!std::isfinite(v)) throw InvalidInput("coefficient is not finite");
  if (a4_to_a0[0] == 0.0) throw InvalidInput("leading coefficient a4 must be nonzero");

  const Poly monic = (1.0 / a4_to_a0[0]) * Poly::from_descending(a4_to_a0);
  const double shift = monic[3] / 4.0;
  const Poly expanded = taylor_shift(monic, -shift);
  double max_in = 0.0;
  for (int k = 0; k < 4; ++k) max_in = std::max(max_in, std::abs(monic[static_cast<std::size_t>(k)]));
  const double threshold = snap_rel * (1.0 + max_in);
  auto snap = [threshold](double v) { return std::abs(v) <= threshold ? 0.0 : v; };
  return {snap(expanded[2]), snap(expanded[1]), snap(expanded[0]), shift};
}

QuarticReduction reduce_quartic(double m, double p, double q) {
  if (!(m < 0.0)) {
    throw MethodNotApplicable("quartic substitution needs m < 0 (m = " + std::to_string(m) + ")");
  }
  QuarticReduction r;
  r.source = {m, p, q, 0.0};
  r.u = std::sqrt(-m);
  const double u3 = r.u * r.u * r.u;
  const double u4 = u3 * r.u;
  r.params.a = 8.0 * p / u3;
  r.params.b = 8.0 * q / u4 - 1.0;
  return r;
}

double eval_f4(const QuarticParams& r, double theta) {
  return r.a * std::cos(theta) + std::cos(4.0 * theta) + r.b;
}

double eval_f4_prime(const QuarticParams& r, double theta) {
  const double x = std::cos(theta);
  return -std::sin(theta) * (r.a + 32.0 * x * x * x - 16.0 * x);
}

Poly quartic_critical_polynomial(const QuarticParams& r) { return Poly{r.a, -16.0, 0.0, 32.0}; }

CriticalSet solve_critical_quartic(const QuarticParams& r) {
  return critical_set_from_polynomial(quartic_critical_polynomial(r));
}

ClassificationReport classify_quartic(const DepressedQuartic& dq, const ClassifierConfig& cfg) {
  for (double v : {dq.m, dq.p, dq.q, dq.shift})
    if (!std::isfinite(v)) throw InvalidInput("coefficient is not finite");

  detail::AssemblyInput in;
  in.degree = 4;
  in.depressed_poly = dq.as_poly();
  in.depressed = {dq.m, 0.0, dq.p, dq.q, dq.shift};
  in.theorem_labels = false;
  in.refine_tol = cfg.refine_tol;

  if (dq.m < 0.0) {
    const QuarticReduction qr = reduce_quartic(dq.m, dq.p, dq.q);
    const double f0 = eval_f4(qr.params, 0.0);
    const double fpi = eval_f4(qr.params, std::numbers::pi);
    in.reduction = TrigSummary{qr.u, qr.params.a, qr.params.b, 0.0, f0, fpi};
    if (qr.u < cfg.u_min) {
      in.fallback_u = qr.u;
      in.fallback_flag = Degeneracy::SmallU;
    } else {
      detail::TrigRoute route;
      route.u = qr.u;
      route.f = [params = qr.params](double th) { return eval_f4(params, th); };
      route.critical = solve_critical_quartic(qr.params);
      route.eps_tangent =
          cfg.eps_tangent_rel * (1.0 + std::abs(qr.params.a) + std::abs(qr.params.b));
      // Even degree: P4 -> +inf on both sides.
      route.indicator_plus = f0 < 0.0 ? 1 : 0;
      route.indicator_minus = fpi < 0.0 ? 1 : 0;
      in.route = std::move(route);
    }
  } else {
    in.fallback_u = 0.0;
    in.fallback_flag = Degeneracy::MethodNotApplicable;
  }
  return detail::assemble_report(in);
}

ClassificationReport classify_quartic(double m, double p, double q, const ClassifierConfig& cfg) {
  return classify_quartic(DepressedQuartic{m, p, q, 0.0}, cfg);
}

}  // namespace chebroot
