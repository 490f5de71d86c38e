#ifndef CHEBROOT_SRC_REPORT_ASSEMBLY_HPP
#define CHEBROOT_SRC_REPORT_ASSEMBLY_HPP

#include <functional>
#include <optional>

#include "chebroot/classifier.hpp"

namespace chebroot::detail {

// Everything the trigonometric route needs, independent of the degree.
struct TrigRoute {
  double u = 0.0;
  std::function<double(double)> f;
  CriticalSet critical;
  double eps_tangent = 0.0;
  int indicator_plus = 0;
  int indicator_minus = 0;
};

struct AssemblyInput {
  int degree = 5;
  Poly depressed_poly;
  DepressedSummary depressed;
  std::optional<TrigSummary> reduction;
  // Absent: go straight to the oracle with `fallback_u` and `fallback_flag`.
  std::optional<TrigRoute> route;
  double fallback_u = 0.0;
  Degeneracy fallback_flag = Degeneracy::MethodNotApplicable;
  bool theorem_labels = true;
  double refine_tol = 1e-13;
};

ClassificationReport assemble_report(const AssemblyInput& in);

}  // namespace chebroot::detail

#endif  // CHEBROOT_SRC_REPORT_ASSEMBLY_HPP
