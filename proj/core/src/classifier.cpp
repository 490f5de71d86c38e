#include "chebroot/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebroot/errors.hpp"
#include "report_assembly.hpp"

namespace chebroot {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

void add_flag(ClassificationReport& r, Degeneracy d) {
  if (!r.has_flag(d)) r.degenerate.push_back(d);
}

double theta_of(double t, double u) { return std::acos(std::clamp(t / u, -1.0, 1.0)); }

}  // namespace

std::string_view to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::TangentZero: return "TangentZero";
    case Degeneracy::BoundaryRoot: return "BoundaryRoot";
    case Degeneracy::NonGenericExterior: return "NonGenericExterior";
    case Degeneracy::SmallU: return "SmallU";
    case Degeneracy::MethodNotApplicable: return "MethodNotApplicable";
    case Degeneracy::MultipleRoot: return "MultipleRoot";
    case Degeneracy::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

std::string_view to_string(Method m) {
  return m == Method::TrigMethod ? "TrigMethod" : "OracleFallback";
}

bool ClassificationReport::has_flag(Degeneracy d) const {
  return std::find(degenerate.begin(), degenerate.end(), d) != degenerate.end();
}

InteriorCount count_interior(const std::function<double(double)>& f, const CriticalSet& c,
                             double eps) {
  InteriorCount ic;
  ic.node_thetas.reserve(c.size() + 2);
  ic.node_thetas.push_back(0.0);
  ic.node_thetas.insert(ic.node_thetas.end(), c.thetas.begin(), c.thetas.end());
  ic.node_thetas.push_back(std::numbers::pi);

  for (std::size_t i = 0; i < ic.node_thetas.size(); ++i) {
    const double v = f(ic.node_thetas[i]);
    ic.node_values.push_back(v);
    if (std::abs(v) <= eps) {
      const bool endpoint = i == 0 || i + 1 == ic.node_thetas.size();
      (endpoint ? ic.boundary_root : ic.tangent_zero) = true;
    }
  }
  for (std::size_t i = 0; i + 1 < ic.node_values.size(); ++i) {
    if (sign_of(ic.node_values[i]) * sign_of(ic.node_values[i + 1]) < 0) {
      ic.brackets.push_back({ic.node_thetas[i], ic.node_thetas[i + 1]});
    }
  }
  ic.n_int = static_cast<int>(ic.brackets.size());
  return ic;
}

InteriorCount count_interior(const TrigParams& r, const CriticalSet& c, double eps) {
  return count_interior([&r](double th) { return eval_f(r, th); }, c, eps);
}

double eps_tangent(const TrigParams& r, double rel) {
  return rel * (1.0 + std::abs(r.alpha) + std::abs(r.beta) + std::abs(r.gamma));
}

ExteriorCount certify_exterior(const SturmChain& chain, double u, int indicator_plus,
                               int indicator_minus) {
  ExteriorCount ec;
  ec.indicator_plus = indicator_plus;
  ec.indicator_minus = indicator_minus;
  const double bound = cauchy_bound(chain.source());
  ec.plus = u < bound ? count_roots(chain, u, bound) : 0;
  ec.minus = u < bound ? count_roots(chain, -bound, -u) : 0;
  ec.certified = true;
  return ec;
}

ExteriorCount count_exterior(const DepressedQuintic& dq, const TrigReduction& r, double f0,
                             double fpi) {
  return certify_exterior(build_chain(dq.as_poly()), r.u, f0 < 0.0 ? 1 : 0, fpi > 0.0 ? 1 : 0);
}

double bisect_theta(const std::function<double(double)>& f, Bracket b, double tol) {
  double lo = b.lo;
  double hi = b.hi;
  double flo = f(lo);
  const double fhi = f(hi);
  if (!(sign_of(flo) * sign_of(fhi) < 0)) {
    throw NoSignChange("f does not change sign strictly across the bracket");
  }
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi || hi - lo <= tol) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (sign_of(fm) == sign_of(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
}

double refine_interior_root(const TrigReduction& r, Bracket b, double tol) {
  const double theta = bisect_theta([&r](double th) { return eval_f(r, th); }, b, tol);
  return r.u * std::cos(theta);
}

OraclePartition oracle_partition(const SturmChain& chain, double u) {
  OraclePartition op;
  op.total = count_all_roots(chain);
  const double bound = cauchy_bound(chain.source());
  const double edge = u + 1e-12 * (1.0 + u);
  if (edge < bound) {
    op.plus = count_roots(chain, edge, bound);
    op.minus = count_roots(chain, -bound, -edge);
  }
  op.n_int = op.total - op.plus - op.minus;
  return op;
}

std::string scenario_label(int n_int, int plus, int minus) {
  const int ext = plus + minus;
  switch (n_int + ext) {
    case 5:
      return "Thm1";
    case 3:
      if (n_int == 3 && ext == 0) return "Thm2(a)";
      if (n_int == 1 && plus == 1 && minus == 1) return "Thm2(b)";
      if (n_int == 2 && ext == 1) return "Thm2(c)";
      return "Thm2";
    case 1:
      if (n_int == 1) return "Thm3(a)";
      if (minus == 1) return "Thm3(b)";
      return "Thm3(c)";
    default:
      return "none";
  }
}

namespace detail {

ClassificationReport assemble_report(const AssemblyInput& in) {
  ClassificationReport rep;
  rep.degree = in.degree;
  rep.depressed = in.depressed;
  rep.reduction = in.reduction;

  const SturmChain chain = build_chain(in.depressed_poly);
  const double bound = cauchy_bound(in.depressed_poly);
  rep.oracle_n_real = count_all_roots(chain);
  if (chain.has_multiple_roots()) add_flag(rep, Degeneracy::MultipleRoot);

  bool use_oracle = !in.route.has_value();
  double u = in.fallback_u;
  if (use_oracle) {
    add_flag(rep, in.fallback_flag);
  } else {
    const detail::TrigRoute& route = *in.route;
    u = route.u;
    rep.critical_thetas = route.critical.thetas;
    const InteriorCount ic = count_interior(route.f, route.critical, route.eps_tangent);
    const ExteriorCount ec =
        certify_exterior(chain, route.u, route.indicator_plus, route.indicator_minus);
    rep.trig_n_real = ic.n_int + ec.plus + ec.minus;
    if (ec.non_generic()) add_flag(rep, Degeneracy::NonGenericExterior);
    if (ic.tangent_zero) add_flag(rep, Degeneracy::TangentZero);
    if (ic.boundary_root) add_flag(rep, Degeneracy::BoundaryRoot);

    if (ic.tangent_zero || ic.boundary_root) {
      use_oracle = true;
    } else if (*rep.trig_n_real != rep.oracle_n_real) {
      add_flag(rep, Degeneracy::OracleDisagreement);
      use_oracle = true;
    } else {
      rep.method = Method::TrigMethod;
      rep.n_int = ic.n_int;
      rep.n_ext_plus = ec.plus;
      rep.n_ext_minus = ec.minus;
      rep.interior_brackets = ic.brackets;
      for (const Bracket& b : ic.brackets) {
        const double theta = bisect_theta(route.f, b, in.refine_tol);
        rep.interior_thetas.push_back(theta);
        rep.t_roots.push_back(route.u * std::cos(theta));
      }
      if (ec.plus > 0) {
        for (double t : isolate_and_refine(chain, route.u, bound, in.refine_tol))
          rep.t_roots.push_back(t);
      }
      if (ec.minus > 0) {
        for (double t : isolate_and_refine(chain, -bound, -route.u, in.refine_tol))
          rep.t_roots.push_back(t);
      }
    }
  }

  if (use_oracle) {
    rep.method = Method::OracleFallback;
    const OraclePartition op = oracle_partition(chain, u);
    rep.n_int = op.n_int;
    rep.n_ext_plus = op.plus;
    rep.n_ext_minus = op.minus;
    rep.t_roots = distinct_real_roots(chain, in.refine_tol);
    if (u > 0.0) {
      for (double t : rep.t_roots)
        if (std::abs(t) <= u * (1.0 + 1e-12)) rep.interior_thetas.push_back(theta_of(t, u));
      std::sort(rep.interior_thetas.begin(), rep.interior_thetas.end());
    }
  }

  rep.n_real = rep.n_int + rep.n_ext_plus + rep.n_ext_minus;
  std::sort(rep.t_roots.begin(), rep.t_roots.end());
  rep.roots.reserve(rep.t_roots.size());
  for (double t : rep.t_roots) rep.roots.push_back(t - in.depressed.shift);
  std::sort(rep.roots.begin(), rep.roots.end());

  const bool has_interval = !(rep.has_flag(Degeneracy::MethodNotApplicable) ||
                              rep.has_flag(Degeneracy::SmallU));
  rep.scenario = in.theorem_labels && has_interval
                     ? scenario_label(rep.n_int, rep.n_ext_plus, rep.n_ext_minus)
                     : "none";
  return rep;
}

}  // namespace detail

ClassificationReport classify(const MonicQuintic& q, const ClassifierConfig& cfg) {
  const DepressedQuintic dq = depress(q, {cfg.snap_rel});

  detail::AssemblyInput in;
  in.degree = 5;
  in.depressed_poly = dq.as_poly();
  in.depressed = {dq.m, dq.n, dq.p, dq.q, dq.shift};
  in.refine_tol = cfg.refine_tol;

  if (dq.m < 0.0) {
    const TrigReduction tr = reduce(dq);
    const BoundaryValues bv = boundary_values(tr);
    in.reduction = TrigSummary{tr.u, tr.alpha(), tr.beta(), tr.gamma(), bv.f0, bv.fpi};
    if (tr.u < cfg.u_min) {
      in.fallback_u = tr.u;
      in.fallback_flag = Degeneracy::SmallU;
    } else {
      detail::TrigRoute route;
      route.u = tr.u;
      route.f = [params = tr.params](double th) { return eval_f(params, th); };
      route.critical = solve_critical(tr.params);
      route.eps_tangent = eps_tangent(tr.params, cfg.eps_tangent_rel);
      route.indicator_plus = bv.f0 < 0.0 ? 1 : 0;
      route.indicator_minus = bv.fpi > 0.0 ? 1 : 0;
      in.route = std::move(route);
    }
  } else {
    in.fallback_u = 0.0;
    in.fallback_flag = Degeneracy::MethodNotApplicable;
  }
  return detail::assemble_report(in);
}

}  // namespace chebroot
