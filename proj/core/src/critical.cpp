#include "chebroot/critical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebroot/sturm.hpp"

namespace chebroot {

namespace {

CriticalSet finish(std::vector<double> xs, bool biquadratic) {
  CriticalSet cs;
  cs.used_biquadratic = biquadratic;
  std::sort(xs.begin(), xs.end(), std::greater<>());

  std::vector<double> kept;
  for (double x : xs) {
    if (1.0 - std::abs(x) <= kCriticalBoundaryTolerance) cs.boundary_degenerate = true;
    if (std::abs(x) >= 1.0) continue;
    // Tangent critical points of g show up as tight clusters.
    if (!kept.empty() && kept.back() - x < kCriticalClusterTolerance) {
      kept.back() = 0.5 * (kept.back() + x);
      continue;
    }
    kept.push_back(x);
  }
  for (double x : kept) {
    const double theta = std::acos(x);
    if (theta <= 0.0 || theta >= std::numbers::pi) continue;
    cs.xs.push_back(x);
    cs.thetas.push_back(theta);
  }
  return cs;
}

}  // namespace

double critical_g(const TrigParams& r, double x) {
  const double x2 = x * x;
  return 80.0 * x2 * x2 - 60.0 * x2 + 2.0 * r.alpha * x + (r.beta + 5.0);
}

Poly critical_polynomial(const TrigParams& r) {
  return Poly{r.beta + 5.0, 2.0 * r.alpha, -60.0, 0.0, 80.0};
}

CriticalSet critical_set_from_polynomial(const Poly& g) {
  if (g.degree() < 1) return finish({}, false);
  // Slightly past +-1 so roots sitting on the boundary are seen and flagged.
  const double reach = 1.0 + 1e-9;
  return finish(isolate_and_refine(build_chain(g), -reach, reach, 0.0), false);
}

CriticalSet solve_critical_general(const TrigParams& r) {
  return critical_set_from_polynomial(critical_polynomial(r));
}

CriticalSet solve_critical_biquadratic(const TrigParams& r) {
  const double disc = 5.0 - 0.8 * r.beta;
  if (disc < 0.0) return finish({}, true);
  const double y_hi = (3.0 + std::sqrt(disc)) / 8.0;
  // y_hi * y_lo = (beta + 5) / 80; avoids cancellation when beta is near -5.
  const double y_lo = (r.beta + 5.0) / (80.0 * y_hi);

  std::vector<double> xs;
  for (double y : {y_hi, y_lo}) {
    if (y < 0.0) continue;
    const double x = std::sqrt(y);
    xs.push_back(x);
    if (x > 0.0) xs.push_back(-x);
  }
  return finish(std::move(xs), true);
}

CriticalSet solve_critical(const TrigParams& r) {
  return r.alpha == 0.0 ? solve_critical_biquadratic(r) : solve_critical_general(r);
}

}  // namespace chebroot
