#include "chebroot/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chebroot/errors.hpp"

namespace chebroot {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

Poly normalized(const Poly& p) {
  const double s = p.max_abs_coeff();
  return s > 0.0 ? (1.0 / s) * p : p;
}

// Drop leading coefficients that are rounding noise; zero the whole remainder
// when nothing above the noise floor survives.
Poly clean_remainder(const Poly& r, double floor) {
  std::vector<double> c = r.coeffs();
  while (!c.empty() && std::abs(c.back()) <= floor) c.pop_back();
  return Poly(std::move(c));
}

// Sign of p just to the right of x: the first nonvanishing derivative decides.
// Using right limits makes V(lo) - V(hi) count roots in (lo, hi] exactly,
// including multiple roots that land on an endpoint.
int sign_right_of(const Poly& p, double x) {
  if (const int s = sign_of(eval_poly(p, x)); s != 0) return s;
  for (Poly d = derivative(p); !d.is_zero(); d = derivative(d)) {
    if (const int s = sign_of(eval_poly(d, x)); s != 0) return s;
  }
  return 0;
}

int count_variations(const std::vector<Poly>& polys, auto&& sign_at) {
  int changes = 0;
  int last = 0;
  for (const Poly& p : polys) {
    const int s = sign_at(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

bool narrow_enough(double a, double b, double tol) {
  const double mid = a + 0.5 * (b - a);
  if (mid <= a || mid >= b) return true;
  return (b - a) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

double refine_single(const SturmChain& chain, double a, double b, double tol) {
  const Poly& p = chain.source();
  double pa = eval_poly(p, a);
  const double pb = eval_poly(p, b);
  if (pb == 0.0) return b;
  if (pa != 0.0 && sign_of(pa) != sign_of(pb)) {
    while (!narrow_enough(a, b, tol)) {
      const double mid = a + 0.5 * (b - a);
      const double pm = eval_poly(p, mid);
      if (pm == 0.0) return mid;
      if (sign_of(pm) == sign_of(pa)) {
        a = mid;
        pa = pm;
      } else {
        b = mid;
      }
    }
    return a + 0.5 * (b - a);
  }
  // No sign change of P across the bracket: even multiplicity, or rounding
  // near the endpoints. Keep bisecting on Sturm counts instead.
  while (!narrow_enough(a, b, tol)) {
    const double mid = a + 0.5 * (b - a);
    if (count_roots(chain, a, mid) >= 1)
      b = mid;
    else
      a = mid;
  }
  return a + 0.5 * (b - a);
}

void isolate(const SturmChain& chain, double a, double b, int count, double tol,
             std::vector<double>& out) {
  if (count <= 0) return;
  if (narrow_enough(a, b, tol)) {
    out.push_back(a + 0.5 * (b - a));
    return;
  }
  if (count == 1) {
    out.push_back(refine_single(chain, a, b, tol));
    return;
  }
  const double mid = a + 0.5 * (b - a);
  const int left = count_roots(chain, a, mid);
  isolate(chain, a, mid, left, tol, out);
  isolate(chain, mid, b, count - left, tol, out);
}

}  // namespace

int SturmChain::sign_variations(double x) const {
  return count_variations(polys_, [x](const Poly& p) { return sign_right_of(p, x); });
}

int SturmChain::sign_variations_at_neg_inf() const {
  return count_variations(polys_, [](const Poly& p) {
    const int s = sign_of(p.leading());
    return p.degree() % 2 == 0 ? s : -s;
  });
}

int SturmChain::sign_variations_at_pos_inf() const {
  return count_variations(polys_, [](const Poly& p) { return sign_of(p.leading()); });
}

SturmChain build_chain(const Poly& p, double truncation_rel) {
  if (p.is_zero()) throw ZeroPolynomial();
  SturmChain chain;
  chain.polys_.push_back(p);
  Poly d = derivative(p);
  if (d.is_zero()) return chain;
  chain.polys_.push_back(normalized(d));

  // Relative error carried by the current pair. A remainder much smaller than
  // its inputs amplifies it by the cancellation ratio, so the noise floor for
  // later remainders has to grow with it.
  const double unit = 16.0 * std::numeric_limits<double>::epsilon() * (p.degree() + 1);
  double carried = unit;

  // Degrees strictly decrease, so this terminates after at most deg(P) steps.
  while (chain.polys_.back().degree() > 0) {
    const Poly& a = chain.polys_[chain.polys_.size() - 2];
    const Poly& b = chain.polys_.back();
    DivMod qr = divmod(a, b);
    const double scale =
        std::max(a.max_abs_coeff(), qr.quotient.max_abs_coeff() * b.max_abs_coeff());
    Poly r = clean_remainder(qr.remainder, std::max(truncation_rel, carried) * scale);
    if (r.is_zero()) break;
    carried = carried * scale / r.max_abs_coeff() + unit;
    chain.polys_.push_back(normalized(-1.0 * r));
  }
  chain.gcd_noise_ = carried;
  return chain;
}

int count_roots(const SturmChain& chain, double lo, double hi) {
  return chain.sign_variations(lo) - chain.sign_variations(hi);
}

int count_all_roots(const SturmChain& chain) {
  return chain.sign_variations_at_neg_inf() - chain.sign_variations_at_pos_inf();
}

double cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p[static_cast<std::size_t>(k)]) / lead);
  return 1.0 + m;
}

std::vector<double> isolate_and_refine(const SturmChain& chain, double lo, double hi,
                                       double tol) {
  std::vector<double> roots;
  if (!(lo < hi)) return roots;
  isolate(chain, lo, hi, count_roots(chain, lo, hi), tol, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> isolate_and_refine(const Poly& p, double lo, double hi, double tol) {
  return isolate_and_refine(build_chain(p), lo, hi, tol);
}

int root_multiplicity(const Poly& p, double r, double radius) {
  const double w = radius * (1.0 + std::abs(r));
  int mult = 1;
  SturmChain chain = build_chain(p);
  while (chain.has_multiple_roots()) {
    // Each gcd inherits the error of the chain that produced it.
    chain = build_chain(chain.gcd_with_derivative(),
                        std::max(kSturmTruncationRel, chain.gcd_noise()));
    if (count_roots(chain, r - w, r + w) < 1) break;
    ++mult;
  }
  return mult;
}

std::vector<double> distinct_real_roots(const SturmChain& chain, double tol) {
  const Poly& p = chain.source();
  const double bound = cauchy_bound(p);
  if (chain.has_multiple_roots()) {
    const SturmChain sf = build_chain(divmod(p, chain.gcd_with_derivative()).quotient);
    if (!sf.has_multiple_roots() && count_all_roots(sf) == count_all_roots(chain)) {
      return isolate_and_refine(sf, -bound, bound, tol);
    }
  }
  return isolate_and_refine(chain, -bound, bound, tol);
}

OracleResult oracle_solve(const Poly& p) {
  const SturmChain chain = build_chain(p);
  OracleResult res;
  res.distinct_real = count_all_roots(chain);
  res.multiple_roots = chain.has_multiple_roots();
  if (res.distinct_real == 0) return res;
  for (double r : distinct_real_roots(chain)) {
    res.roots.push_back({r, res.multiple_roots ? root_multiplicity(p, r) : 1});
  }
  return res;
}

}  // namespace chebroot
