#include <algorithm>
#include <numbers>
#include <ostream>
#include <thread>

#include "chebroot/classifier.hpp"
#include "chebroot/cli.hpp"
#include "chebroot/critical.hpp"

namespace chebroot::cli {

double AxisRange::at(int i) const {
  if (steps <= 1) return lo;
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::size_t SweepGrid::size() const {
  return static_cast<std::size_t>(alpha.steps) * static_cast<std::size_t>(beta.steps) *
         static_cast<std::size_t>(gamma.steps);
}

SweepRow sweep_point(const TrigParams& p, double eps_tangent_rel) {
  const BoundaryValues bv = boundary_values(p);
  const InteriorCount ic = count_interior(p, solve_critical(p), eps_tangent(p, eps_tangent_rel));
  return {p.alpha, p.beta, p.gamma, ic.n_int, bv.f0, bv.fpi};
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid, double eps_tangent_rel, unsigned threads) {
  const std::size_t total = grid.size();
  std::vector<SweepRow> rows(total);
  const auto nb = static_cast<std::size_t>(grid.beta.steps);
  const auto ng = static_cast<std::size_t>(grid.gamma.steps);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto ia = static_cast<int>(idx / (nb * ng));
      const auto ib = static_cast<int>((idx / ng) % nb);
      const auto ig = static_cast<int>(idx % ng);
      rows[idx] = sweep_point({grid.alpha.at(ia), grid.beta.at(ib), grid.gamma.at(ig)},
                              eps_tangent_rel);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, total / 256)));
  if (threads <= 1) {
    work(0, total);
    return rows;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "alpha,beta,gamma,n_int,f0,fpi\n";
  for (const SweepRow& r : rows) {
    out << format_real(r.alpha) << ',' << format_real(r.beta) << ',' << format_real(r.gamma)
        << ',' << r.n_int << ',' << format_real(r.f0) << ',' << format_real(r.fpi) << '\n';
  }
}

void write_plot_csv(std::ostream& out, const TrigParams& p, int samples) {
  out << "theta,f\n";
  for (int i = 0; i < samples; ++i) {
    const double theta = i == samples - 1 ? std::numbers::pi
                                          : std::numbers::pi * static_cast<double>(i) /
                                                static_cast<double>(samples - 1);
    out << format_real(theta) << ',' << format_real(eval_f(p, theta)) << '\n';
  }
}

}  // namespace chebroot::cli
