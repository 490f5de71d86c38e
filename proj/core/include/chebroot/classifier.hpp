#ifndef CHEBROOT_CLASSIFIER_HPP
#define CHEBROOT_CLASSIFIER_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebroot/critical.hpp"
#include "chebroot/poly.hpp"
#include "chebroot/sturm.hpp"
#include "chebroot/trig_reduce.hpp"

namespace chebroot {

struct ClassifierConfig {
  /// eps_tangent = eps_tangent_rel * (1 + |alpha| + |beta| + |gamma|).
  double eps_tangent_rel = 1e-9;
  /// Below this substitution scale the parameters blow up; use the oracle.
  double u_min = 1e-6;
  double snap_rel = 1e-12;
  /// Bracket width for theta bisection and exterior refinement.
  double refine_tol = 1e-13;
};

enum class Degeneracy {
  TangentZero,         // |f| <= eps_tangent at an interior critical point
  BoundaryRoot,        // |f| <= eps_tangent at theta = 0 or pi (root at t = +-u)
  NonGenericExterior,  // certified exterior count differs from the sign indicator
  SmallU,              // 0 < u < u_min
  MethodNotApplicable, // m >= 0
  MultipleRoot,        // gcd(P, P') is non-constant
  OracleDisagreement,  // trig count != oracle count with no other explanation
};

enum class Method { TrigMethod, OracleFallback };

std::string_view to_string(Degeneracy d);
std::string_view to_string(Method m);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Sign-change count of f over the nodes {0} U criticals U {pi}.
struct InteriorCount {
  int n_int = 0;
  std::vector<Bracket> brackets;
  std::vector<double> node_thetas;
  std::vector<double> node_values;
  bool tangent_zero = false;
  bool boundary_root = false;
};

struct ExteriorCount {
  int plus = 0;
  int minus = 0;
  int indicator_plus = 0;
  int indicator_minus = 0;
  /// Counts come from Sturm certification rather than the sign indicator alone.
  bool certified = false;
  bool non_generic() const { return plus != indicator_plus || minus != indicator_minus; }
};

/// Reduction data carried in a report; absent when the method does not apply.
struct TrigSummary {
  double u = 0.0;
  double alpha = 0.0;  // quartic: a
  double beta = 0.0;   // quartic: b
  double gamma = 0.0;  // quartic: unused (0)
  double f0 = 0.0;
  double fpi = 0.0;
};

struct DepressedSummary {
  double m = 0.0;
  double n = 0.0;  // quartic: unused (0)
  double p = 0.0;
  double q = 0.0;
  double shift = 0.0;
};

struct ClassificationReport {
  int degree = 5;
  int n_int = 0;
  int n_ext_plus = 0;
  int n_ext_minus = 0;
  int n_real = 0;
  /// Count produced by the trigonometric route (interior sign changes plus
  /// certified exterior counts); absent when the route was not run.
  std::optional<int> trig_n_real;
  /// Independent Sturm count of distinct real roots of the depressed polynomial.
  int oracle_n_real = 0;
  DepressedSummary depressed;
  std::optional<TrigSummary> reduction;
  std::vector<double> critical_thetas;
  std::vector<Bracket> interior_brackets;
  /// theta-domain zeros matching the interior roots.
  std::vector<double> interior_thetas;
  /// Depressed-variable roots, ascending.
  std::vector<double> t_roots;
  /// Original-variable roots z = t - shift, ascending.
  std::vector<double> roots;
  std::vector<Degeneracy> degenerate;
  Method method = Method::TrigMethod;
  std::string scenario;

  bool has_flag(Degeneracy d) const;
  int n_ext() const { return n_ext_plus + n_ext_minus; }
};

/// Generic sign-change counter; f must be monotone between consecutive nodes.
InteriorCount count_interior(const std::function<double(double)>& f, const CriticalSet& c,
                             double eps_tangent);
InteriorCount count_interior(const TrigParams& r, const CriticalSet& c, double eps_tangent);

double eps_tangent(const TrigParams& r, double rel = 1e-9);

/// Sign indicators plus Sturm certification on (u, B] and (-B, -u], B = cauchy_bound(P).
ExteriorCount certify_exterior(const SturmChain& chain, double u, int indicator_plus,
                               int indicator_minus);
/// Quintic indicators: plus = [f(0) < 0], minus = [f(pi) > 0].
ExteriorCount count_exterior(const DepressedQuintic& dq, const TrigReduction& r, double f0,
                             double fpi);

/// Bisect a theta bracket on which f changes sign strictly. Throws NoSignChange.
double bisect_theta(const std::function<double(double)>& f, Bracket b, double tol = 1e-13);
/// t = u cos(theta*) for the zero theta* of f in the bracket.
double refine_interior_root(const TrigReduction& r, Bracket b, double tol = 1e-13);

/// Oracle split of the real roots around [-u, u]: roots within
/// 1e-12 (1 + u) of +-u count as interior.
struct OraclePartition {
  int n_int = 0;
  int plus = 0;
  int minus = 0;
  int total = 0;
};
OraclePartition oracle_partition(const SturmChain& chain, double u);

/// Label per the five/three/one real-root theorems, e.g. "Thm2(b)".
std::string scenario_label(int n_int, int plus, int minus);

ClassificationReport classify(const MonicQuintic& q, const ClassifierConfig& cfg = {});

}  // namespace chebroot

#endif  // CHEBROOT_CLASSIFIER_HPP
