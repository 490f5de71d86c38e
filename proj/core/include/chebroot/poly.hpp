#ifndef CHEBROOT_POLY_HPP
#define CHEBROOT_POLY_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace chebroot {

/// Dense real polynomial, coefficients in ascending degree.
///
/// Trailing (leading-degree) zeros are trimmed on construction, so the
/// leading coefficient is nonzero unless the polynomial is identically zero.
/// The zero polynomial has no coefficients and degree() == 0.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> ascending);
  Poly(std::initializer_list<double> ascending);

  /// Build from coefficients in descending degree (a_n first).
  static Poly from_descending(std::span<const double> descending);

  int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  double operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Largest coefficient magnitude (0 for the zero polynomial).
  double max_abs_coeff() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Horner evaluation.
double eval_poly(const Poly& p, double t);

/// Formal derivative. Constants map to the zero polynomial.
Poly derivative(const Poly& p);

Poly operator*(const Poly& a, const Poly& b);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(double s, const Poly& p);

/// Polynomial long division. Throws ZeroPolynomial when the divisor is zero.
struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& dividend, const Poly& divisor);

/// Expand p(t + shift) by binomial expansion of each monomial.
Poly taylor_shift(const Poly& p, double shift);

/// Zero every coefficient with |c| <= threshold.
Poly snap_small(const Poly& p, double threshold);

/// z^5 + a4 z^4 + a3 z^3 + a2 z^2 + a1 z + a0 with finite coefficients.
class MonicQuintic {
 public:
  MonicQuintic(double a4, double a3, double a2, double a1, double a0);

  /// Normalise a5 z^5 + ... + a0 (descending order, a5 != 0) to monic form.
  static MonicQuintic from_descending(std::span<const double> a5_to_a0);

  double a4() const { return c_[4]; }
  double a3() const { return c_[3]; }
  double a2() const { return c_[2]; }
  double a1() const { return c_[1]; }
  double a0() const { return c_[0]; }
  /// max |a_i| over the non-leading coefficients.
  double max_abs_coeff() const;
  Poly as_poly() const;

 private:
  std::array<double, 5> c_;  // ascending: a0..a4
};

/// t^5 + m t^3 + n t^2 + p t + q, obtained from a MonicQuintic through
/// z = t - shift with shift = a4 / 5.
struct DepressedQuintic {
  double m = 0.0;
  double n = 0.0;
  double p = 0.0;
  double q = 0.0;
  double shift = 0.0;

  Poly as_poly() const;
  /// Original variable from the depressed one.
  double to_original(double t) const { return t - shift; }
};

struct DepressOptions {
  /// Coefficients with |c| <= snap_rel * (1 + max input |a_i|) become 0.
  double snap_rel = 1e-12;
};

DepressedQuintic depress(const MonicQuintic& q, const DepressOptions& opts = {});

}  // namespace chebroot

#endif  // CHEBROOT_POLY_HPP
