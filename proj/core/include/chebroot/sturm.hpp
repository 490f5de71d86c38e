#ifndef CHEBROOT_STURM_HPP
#define CHEBROOT_STURM_HPP

#include <vector>

#include "chebroot/poly.hpp"

namespace chebroot {

/// Signed-remainder sequence P, P', -rem(P, P'), ... used for counting
/// distinct real roots.
///
/// Every member after P is rescaled by a positive factor so that its largest
/// coefficient has magnitude 1; positive scaling does not change sign
/// variations. A remainder whose coefficients are all below
/// `truncation_rel` times the local scale of the division is treated as zero,
/// and the chain stops. After a step with heavy cancellation the floor is
/// raised to the rounding error carried into the next division. The last member is then (a multiple of)
/// gcd(P, P'), so a chain ending in a non-constant member means P has
/// repeated roots.
class SturmChain {
 public:
  const std::vector<Poly>& polys() const { return polys_; }
  const Poly& source() const { return polys_.front(); }
  /// gcd(P, P') up to a constant factor.
  const Poly& gcd_with_derivative() const { return polys_.back(); }
  bool has_multiple_roots() const { return polys_.back().degree() > 0; }
  /// Estimated relative error of the last member.
  double gcd_noise() const { return gcd_noise_; }

  /// Sign changes of the right limits at x (a member vanishing at x takes the
  /// sign it has just to the right of x).
  int sign_variations(double x) const;
  int sign_variations_at_neg_inf() const;
  int sign_variations_at_pos_inf() const;

 private:
  friend SturmChain build_chain(const Poly& p, double truncation_rel);
  std::vector<Poly> polys_;
  double gcd_noise_ = 0.0;
};

inline constexpr double kSturmTruncationRel = 1e-12;

/// Throws ZeroPolynomial for the zero polynomial.
SturmChain build_chain(const Poly& p, double truncation_rel = kSturmTruncationRel);

/// Distinct real roots in (lo, hi].
int count_roots(const SturmChain& chain, double lo, double hi);

/// Distinct real roots on the whole line.
int count_all_roots(const SturmChain& chain);

/// 1 + max |a_i / a_n|. Every real root lies in [-B, B].
double cauchy_bound(const Poly& p);

/// Sorted distinct real roots in (lo, hi].
///
/// Bisects with Sturm counts until each subinterval holds one root, then
/// bisects on the sign of P (or on Sturm counts again when P does not
/// change sign there, as at even-multiplicity roots) until the bracket is
/// narrower than tol * (1 + |root|) or stops shrinking.
std::vector<double> isolate_and_refine(const SturmChain& chain, double lo, double hi,
                                       double tol = 1e-13);
std::vector<double> isolate_and_refine(const Poly& p, double lo, double hi, double tol = 1e-13);

/// All distinct real roots of the chain's source, sorted. With repeated roots
/// present the refinement runs on P / gcd(P, P'), whose roots are simple.
std::vector<double> distinct_real_roots(const SturmChain& chain, double tol = 1e-13);

/// Estimated multiplicity of a root r of P, using the gcd tower
/// P, gcd(P, P'), gcd(gcd, gcd'), ...: each member having a root within
/// radius of r adds one.
int root_multiplicity(const Poly& p, double r, double radius = 1e-6);

/// Real roots with their estimated multiplicities.
struct OracleRoot {
  double value = 0.0;
  int multiplicity = 1;
};

struct OracleResult {
  int distinct_real = 0;
  std::vector<OracleRoot> roots;
  bool multiple_roots = false;
};

/// Count and refine every real root of p. Throws ZeroPolynomial.
OracleResult oracle_solve(const Poly& p);

}  // namespace chebroot

#endif  // CHEBROOT_STURM_HPP
