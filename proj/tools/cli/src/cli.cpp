#include "chebroot/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "chebroot/errors.hpp"
#include "chebroot/quartic.hpp"

namespace chebroot::cli {

namespace {

// Raised for arity and structural problems; maps to exit code 64.
struct UsageError {
  std::string message;
};

std::string fixed12(double v) {
  if (v == 0.0) v = 0.0;  // no "-0.000000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::vector<double> parse_coefficients(const std::vector<std::string>& tokens) {
  std::vector<double> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    const auto v = parse_real(t);
    if (!v) throw InvalidInput("not a number: '" + t + "'");
    out.push_back(*v);
  }
  return out;
}

std::optional<double> resolve_eps(const std::string& flag, const std::optional<std::string>& env) {
  const std::string* src = !flag.empty() ? &flag : (env ? &*env : nullptr);
  if (!src) return std::nullopt;
  const auto v = parse_real(*src);
  if (!v || !(*v >= 0.0)) throw InvalidInput("invalid eps_tangent value: '" + *src + "'");
  return v;
}

ClassifierConfig classifier_config(const CliConfig& cfg) {
  ClassifierConfig cc;
  if (cfg.eps_tangent) cc.eps_tangent_rel = *cfg.eps_tangent;
  if (cfg.u_min) cc.u_min = *cfg.u_min;
  return cc;
}

void print_list(std::ostream& out, std::string_view label, const std::vector<double>& v) {
  out << label << ":";
  if (v.empty()) out << " (none)";
  for (double x : v) out << ' ' << fixed12(x);
  out << '\n';
}

void print_report_text(std::ostream& out, const ClassificationReport& r, bool verbose) {
  const auto& d = r.depressed;
  out << "depressed: m = " << fixed12(d.m);
  if (r.degree == 5) out << ", n = " << fixed12(d.n);
  out << ", p = " << fixed12(d.p) << ", q = " << fixed12(d.q) << ", shift = " << fixed12(d.shift)
      << '\n';
  if (r.reduction) {
    const auto& t = *r.reduction;
    if (r.degree == 5) {
      out << "u = " << fixed12(t.u) << ", alpha = " << fixed12(t.alpha)
          << ", beta = " << fixed12(t.beta) << ", gamma = " << fixed12(t.gamma) << '\n';
    } else {
      out << "u = " << fixed12(t.u) << ", a = " << fixed12(t.alpha) << ", b = " << fixed12(t.beta)
          << '\n';
    }
    out << "f(0) = " << fixed12(t.f0) << ", f(pi) = " << fixed12(t.fpi) << '\n';
  }
  out << "N_int = " << r.n_int << ", N_ext+ = " << r.n_ext_plus << ", N_ext- = " << r.n_ext_minus
      << ", N_real = " << r.n_real << ", N_complex = " << (r.degree - r.n_real) << '\n';
  out << "scenario: " << r.scenario << '\n';
  out << "method: " << to_string(r.method) << '\n';
  out << "flags:";
  if (r.degenerate.empty()) out << " none";
  for (Degeneracy f : r.degenerate) out << ' ' << to_string(f);
  out << '\n';
  print_list(out, "roots", r.roots);
  if (verbose) {
    print_list(out, "t_roots", r.t_roots);
    print_list(out, "interior_thetas", r.interior_thetas);
    print_list(out, "critical_thetas", r.critical_thetas);
    out << "interior_brackets:";
    if (r.interior_brackets.empty()) out << " (none)";
    for (const Bracket& b : r.interior_brackets)
      out << " [" << fixed12(b.lo) << ", " << fixed12(b.hi) << ']';
    out << '\n';
    out << "trig_n_real = ";
    if (r.trig_n_real)
      out << *r.trig_n_real;
    else
      out << "n/a";
    out << ", oracle_n_real = " << r.oracle_n_real << '\n';
  }
}

void emit_report(const CliConfig& cfg, std::ostream& out, const ClassificationReport& r) {
  if (cfg.output_format == OutputFormat::Json)
    out << report_to_json(r);
  else
    print_report_text(out, r, cfg.verbose);
}

int cmd_classify(const CliConfig& cfg, CliIo& io) {
  const MonicQuintic q = MonicQuintic::from_descending(cfg.coefficients);
  emit_report(cfg, io.out, classify(q, classifier_config(cfg)));
  return kExitOk;
}

int cmd_quartic(const CliConfig& cfg, CliIo& io) {
  const DepressedQuartic dq = depress_quartic(cfg.coefficients);
  emit_report(cfg, io.out, classify_quartic(dq, classifier_config(cfg)));
  return kExitOk;
}

int cmd_plot_f(const CliConfig& cfg, CliIo& io) {
  const DepressedQuintic dq = depress(MonicQuintic::from_descending(cfg.coefficients));
  if (!(dq.m < 0.0)) {
    io.err << "chebroot: method not applicable (m = " << format_real(dq.m)
           << " >= 0); f(theta) is undefined. Use `chebroot oracle` for the Sturm fallback.\n";
    return kExitNotApplicable;
  }
  write_plot_csv(io.out, reduce(dq).params, cfg.theta_samples);
  return kExitOk;
}

int cmd_sweep(const CliConfig& cfg, CliIo& io) {
  const double eps = cfg.eps_tangent.value_or(ClassifierConfig{}.eps_tangent_rel);
  write_sweep_csv(io.out, run_sweep(cfg.sweep_grid, eps));
  return kExitOk;
}

int cmd_oracle(const CliConfig& cfg, CliIo& io) {
  const Poly p = Poly::from_descending(cfg.coefficients);
  if (p.is_zero()) throw ZeroPolynomial();
  const OracleResult res = oracle_solve(p);
  if (cfg.output_format == OutputFormat::Json) {
    io.out << oracle_to_json(p.degree(), res);
    return kExitOk;
  }
  io.out << "degree: " << p.degree() << '\n';
  io.out << "distinct real roots: " << res.distinct_real << '\n';
  io.out << "multiple roots: " << (res.multiple_roots ? "yes" : "no") << '\n';
  io.out << "roots:";
  if (res.roots.empty()) io.out << " (none)";
  io.out << '\n';
  for (const OracleRoot& r : res.roots) {
    io.out << "  " << fixed12(r.value);
    if (r.multiplicity > 1) io.out << "  (multiplicity " << r.multiplicity << ')';
    io.out << '\n';
  }
  return kExitOk;
}

void require_arity(const std::vector<std::string>& tokens, std::size_t lo, std::size_t hi,
                   std::string_view what) {
  if (tokens.size() < lo || tokens.size() > hi) {
    throw UsageError{std::string(what) + ": expected " +
                     (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                     " coefficients, got " + std::to_string(tokens.size())};
  }
}

}  // namespace

std::optional<double> parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::optional<AxisRange> parse_axis_range(std::string_view text) {
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) return std::nullopt;
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) return std::nullopt;
  const auto lo = parse_real(text.substr(0, c1));
  const auto hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
  const std::string_view steps_text = text.substr(c2 + 1);
  int steps = 0;
  const auto res = std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), steps);
  if (!lo || !hi || !std::isfinite(*lo) || !std::isfinite(*hi)) return std::nullopt;
  if (res.ec != std::errc{} || res.ptr != steps_text.data() + steps_text.size() || steps < 1)
    return std::nullopt;
  return AxisRange{*lo, *hi, steps};
}

int run_cli(const std::vector<std::string>& args, CliIo io) {
  CLI::App app{"Classify the real roots of quintics and quartics by trigonometric reduction",
               "chebroot"};
  app.require_subcommand(1);

  std::vector<std::string> coeffs;
  bool json = false;
  bool verbose = false;
  std::string eps_flag;
  double u_min = -1.0;
  int samples = 2001;
  std::string alpha_text, beta_text, gamma_text;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a5 z^5 + ... + a0 (a5 != 0)");
  auto* quartic_cmd = app.add_subcommand("quartic", "Classify a4 z^4 + ... + a0 (a4 != 0)");
  auto* plot_cmd = app.add_subcommand("plot-f", "Sample f(theta) on [0, pi] as CSV");
  auto* sweep_cmd = app.add_subcommand("sweep", "Count interior zeros over an (alpha, beta, gamma) grid");
  auto* oracle_cmd = app.add_subcommand("oracle", "Sturm-oracle real roots of a degree <= 5 polynomial");

  for (auto* sub : {classify_cmd, quartic_cmd}) {
    sub->add_option("coefficients", coeffs, "Coefficients in descending degree");
    sub->add_flag("--json", json, "Emit the report as JSON");
    sub->add_flag("--verbose", verbose, "Include t-domain and theta-domain detail");
    sub->add_option("--eps-tangent", eps_flag, "Relative tangency threshold (default 1e-9)");
    sub->add_option("--u-min", u_min, "Smallest substitution scale before oracle fallback");
  }
  plot_cmd->add_option("coefficients", coeffs, "a5 a4 a3 a2 a1 a0");
  plot_cmd->add_option("--samples", samples, "Number of theta samples (>= 2)");
  sweep_cmd->add_option("--alpha", alpha_text, "lo:hi:n")->required();
  sweep_cmd->add_option("--beta", beta_text, "lo:hi:n")->required();
  sweep_cmd->add_option("--gamma", gamma_text, "lo:hi:n")->required();
  sweep_cmd->add_option("--eps-tangent", eps_flag, "Relative tangency threshold (default 1e-9)");
  oracle_cmd->add_option("coefficients", coeffs, "Coefficients in descending degree");
  oracle_cmd->add_flag("--json", json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CliConfig cfg;
  cfg.verbose = verbose;
  cfg.output_format = json ? OutputFormat::Json : OutputFormat::Text;
  cfg.theta_samples = samples;
  if (u_min >= 0.0) cfg.u_min = u_min;

  try {
    cfg.eps_tangent = resolve_eps(eps_flag, io.env_eps_tangent);
    if (classify_cmd->parsed()) {
      cfg.command = Command::Classify;
      require_arity(coeffs, 6, 6, "classify");
    } else if (quartic_cmd->parsed()) {
      cfg.command = Command::Quartic;
      require_arity(coeffs, 5, 5, "quartic");
    } else if (plot_cmd->parsed()) {
      cfg.command = Command::PlotF;
      cfg.output_format = OutputFormat::Csv;
      require_arity(coeffs, 6, 6, "plot-f");
      if (samples < 2) throw InvalidInput("--samples must be at least 2");
    } else if (sweep_cmd->parsed()) {
      cfg.command = Command::Sweep;
      cfg.output_format = OutputFormat::Csv;
      const auto a = parse_axis_range(alpha_text);
      const auto b = parse_axis_range(beta_text);
      const auto g = parse_axis_range(gamma_text);
      if (!a || !b || !g) throw InvalidInput("ranges must look like lo:hi:n with finite lo, hi and n >= 1");
      cfg.sweep_grid = {*a, *b, *g};
    } else {
      cfg.command = Command::Oracle;
      require_arity(coeffs, 1, 6, "oracle");
    }
    cfg.coefficients = parse_coefficients(coeffs);

    switch (cfg.command) {
      case Command::Classify: return cmd_classify(cfg, io);
      case Command::Quartic: return cmd_quartic(cfg, io);
      case Command::PlotF: return cmd_plot_f(cfg, io);
      case Command::Sweep: return cmd_sweep(cfg, io);
      case Command::Oracle: return cmd_oracle(cfg, io);
    }
  } catch (const UsageError& e) {
    io.err << "chebroot: " << e.message << "\n" << app.help();
    return kExitUsage;
  } catch (const InvalidInput& e) {
    io.err << "chebroot: invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ZeroPolynomial& e) {
    io.err << "chebroot: invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace chebroot::cli
