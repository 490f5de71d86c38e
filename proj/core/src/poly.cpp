#include "chebroot/poly.hpp"

#include <algorithm>
#include <cmath>

#include "chebroot/errors.hpp"

namespace chebroot {

namespace {

void trim(std::vector<double>& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidInput("coefficient is not finite");
  }
}

}  // namespace

Poly::Poly(std::vector<double> ascending) : coeffs_(std::move(ascending)) { trim(coeffs_); }

Poly::Poly(std::initializer_list<double> ascending) : coeffs_(ascending) { trim(coeffs_); }

Poly Poly::from_descending(std::span<const double> descending) {
  return Poly(std::vector<double>(descending.rbegin(), descending.rend()));
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double eval_poly(const Poly& p, double t) {
  const auto& c = p.coeffs();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Poly{};
  std::vector<double> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return Poly(std::move(d));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<double> r(x.size() + y.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<double> r(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0) * b; }

Poly operator*(double s, const Poly& p) {
  std::vector<double> r = p.coeffs();
  for (double& c : r) c *= s;
  return Poly(std::move(r));
}

DivMod divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw ZeroPolynomial();
  std::vector<double> rem = dividend.coeffs();
  const auto& d = divisor.coeffs();
  const int dn = divisor.degree();
  if (dividend.degree() < dn || dividend.is_zero()) return {Poly{}, dividend};

  std::vector<double> quot(static_cast<std::size_t>(dividend.degree() - dn + 1), 0.0);
  const double lead = d.back();
  for (int k = dividend.degree() - dn; k >= 0; --k) {
    const double coef = rem[static_cast<std::size_t>(k + dn)] / lead;
    quot[static_cast<std::size_t>(k)] = coef;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= coef * d[static_cast<std::size_t>(j)];
    rem[static_cast<std::size_t>(k + dn)] = 0.0;
  }
  rem.resize(static_cast<std::size_t>(dn));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly taylor_shift(const Poly& p, double shift) {
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  std::vector<double> out(n, 0.0);
  // binom holds row k of Pascal's triangle.
  std::vector<double> binom(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j > 0; --j) binom[j] += binom[j - 1];
    binom[0] = 1.0;
    if (c[k] == 0.0) continue;
    // c_k * sum_j C(k, j) shift^(k-j) t^j
    double hp = 1.0;
    for (std::size_t j = k + 1; j-- > 0;) {
      out[j] += c[k] * binom[j] * hp;
      hp *= shift;
    }
  }
  return Poly(std::move(out));
}

Poly snap_small(const Poly& p, double threshold) {
  std::vector<double> c = p.coeffs();
  for (double& v : c)
    if (std::abs(v) <= threshold) v = 0.0;
  return Poly(std::move(c));
}

MonicQuintic::MonicQuintic(double a4, double a3, double a2, double a1, double a0)
    : c_{a0, a1, a2, a3, a4} {
  require_finite(c_);
}

MonicQuintic MonicQuintic::from_descending(std::span<const double> a5_to_a0) {
  if (a5_to_a0.size() != 6) throw InvalidInput("a quintic needs exactly six coefficients");
  require_finite(a5_to_a0);
  const double lead = a5_to_a0[0];
  if (lead == 0.0) throw InvalidInput("leading coefficient a5 must be nonzero");
  return MonicQuintic(a5_to_a0[1] / lead, a5_to_a0[2] / lead, a5_to_a0[3] / lead,
                      a5_to_a0[4] / lead, a5_to_a0[5] / lead);
}

double MonicQuintic::max_abs_coeff() const {
  double m = 0.0;
  for (double c : c_) m = std::max(m, std::abs(c));
  return m;
}

Poly MonicQuintic::as_poly() const { return Poly{c_[0], c_[1], c_[2], c_[3], c_[4], 1.0}; }

Poly DepressedQuintic::as_poly() const { return Poly{q, p, n, m, 0.0, 1.0}; }

DepressedQuintic depress(const MonicQuintic& quintic, const DepressOptions& opts) {
  const double shift = quintic.a4() / 5.0;
  // P(t) = Q(t - shift); the t^4 coefficient cancels: 5(-shift) + a4 = 0.
  const Poly expanded = taylor_shift(quintic.as_poly(), -shift);
  const double threshold = opts.snap_rel * (1.0 + quintic.max_abs_coeff());
  auto snap = [threshold](double v) { return std::abs(v) <= threshold ? 0.0 : v; };
  DepressedQuintic dq;
  dq.m = snap(expanded[3]);
  dq.n = snap(expanded[2]);
  dq.p = snap(expanded[1]);
  dq.q = snap(expanded[0]);
  dq.shift = shift;
  return dq;
}

}  // namespace chebroot
