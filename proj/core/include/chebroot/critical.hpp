#ifndef CHEBROOT_CRITICAL_HPP
#define CHEBROOT_CRITICAL_HPP

#include <vector>

#include "chebroot/poly.hpp"
#include "chebroot/trig_reduce.hpp"

namespace chebroot {

/// Interior critical points of f on (0, pi), as theta = arccos(x) for the
/// real roots x in (-1, 1) of the critical-point polynomial in x = cos(theta).
struct CriticalSet {
  std::vector<double> thetas;  // strictly increasing, all in (0, pi)
  std::vector<double> xs;      // cos(thetas), so strictly decreasing
  bool used_biquadratic = false;
  /// A root of the critical polynomial lies within kBoundaryTolerance of +-1.
  bool boundary_degenerate = false;

  std::size_t size() const { return thetas.size(); }
  bool empty() const { return thetas.empty(); }
};

inline constexpr double kCriticalClusterTolerance = 1e-9;
inline constexpr double kCriticalBoundaryTolerance = 1e-10;

/// g(x) = 80x^4 - 60x^2 + 2 alpha x + (beta + 5); f'(theta) = -sin(theta) g(cos theta).
double critical_g(const TrigParams& r, double x);
Poly critical_polynomial(const TrigParams& r);

/// Closed form when alpha == 0, Sturm isolation otherwise.
CriticalSet solve_critical(const TrigParams& r);
inline CriticalSet solve_critical(const TrigReduction& r) { return solve_critical(r.params); }

/// Always uses Sturm isolation, even when alpha == 0.
CriticalSet solve_critical_general(const TrigParams& r);

/// With alpha == 0, g is biquadratic: 80y^2 - 60y + (beta + 5) with y = x^2, so
/// y = (3 +- sqrt(5 - 4 beta / 5)) / 8. Ignores alpha.
CriticalSet solve_critical_biquadratic(const TrigParams& r);

/// Critical set from the real roots of any polynomial in x = cos(theta)
/// whose roots in (-1, 1) are the interior critical points.
CriticalSet critical_set_from_polynomial(const Poly& g);

}  // namespace chebroot

#endif  // CHEBROOT_CRITICAL_HPP
