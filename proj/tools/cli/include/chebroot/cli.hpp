#ifndef CHEBROOT_CLI_HPP
#define CHEBROOT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebroot/classifier.hpp"
#include "chebroot/sturm.hpp"
#include "chebroot/trig_reduce.hpp"

namespace chebroot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNotApplicable = 3;
inline constexpr int kExitUsage = 64;

enum class Command { Classify, Quartic, Sweep, PlotF, Oracle };
enum class OutputFormat { Text, Json, Csv };

/// lo:hi:steps; steps points evenly spaced with both ends included.
struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  double at(int i) const;
};

struct SweepGrid {
  AxisRange alpha;
  AxisRange beta;
  AxisRange gamma;

  std::size_t size() const;
};

struct CliConfig {
  Command command = Command::Classify;
  std::vector<double> coefficients;  // descending degree
  OutputFormat output_format = OutputFormat::Text;
  int theta_samples = 2001;
  SweepGrid sweep_grid;
  bool verbose = false;
  std::optional<double> eps_tangent;  // relative factor
  std::optional<double> u_min;
};

/// Parse "lo:hi:n". Returns nullopt on malformed or non-finite input or n < 1.
std::optional<AxisRange> parse_axis_range(std::string_view text);

/// Strict decimal parse (no locale); accepts a leading '+'.
std::optional<double> parse_real(std::string_view text);

/// 17 significant digits, '.' separator, -0 printed as 0, non-finite as null.
std::string format_real(double v);

/// Canonical JSON for a classification report; field order is fixed.
std::string report_to_json(const ClassificationReport& r);
std::string oracle_to_json(int degree, const OracleResult& r);

/// Re-serialise JSON text in canonical form. report_to_json output is a fixed point.
std::string canonicalize_json(std::string_view text);

struct SweepRow {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  int n_int = 0;
  double f0 = 0.0;
  double fpi = 0.0;
};

/// Interior zero count of f directly in (alpha, beta, gamma) space, ordered
/// alpha-major then beta then gamma regardless of thread scheduling.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, double eps_tangent_rel = 1e-9,
                                unsigned threads = 0);
SweepRow sweep_point(const TrigParams& p, double eps_tangent_rel = 1e-9);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// Header `theta,f`, samples rows with theta uniform on [0, pi].
void write_plot_csv(std::ostream& out, const TrigParams& p, int samples);

struct CliIo {
  std::ostream& out;
  std::ostream& err;
  /// Value of CHEBROOT_EPS_TANGENT, if set.
  std::optional<std::string> env_eps_tangent;
};

/// Entry point shared by the executable and tests; args exclude argv[0].
int run_cli(const std::vector<std::string>& args, CliIo io);

}  // namespace chebroot::cli

#endif  // CHEBROOT_CLI_HPP
