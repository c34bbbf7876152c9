#include "qho/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "qho/bargmann.hpp"
#include "qho/eigenfunctions.hpp"
#include "qho/error.hpp"
#include "qho/hermite.hpp"
#include "qho/report.hpp"
#include "qho/suite.hpp"

namespace qho::cli {
namespace {

/// Parses "a,b,c" into three numbers.
template <class T>
std::optional<std::array<T, 3>> parse_triple(const std::string& text) {
  std::array<T, 3> out{};
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) {
      char comma = 0;
      if (!(in >> comma) || comma != ',') return std::nullopt;
    }
    if (!(in >> out[i])) return std::nullopt;
  }
  char extra = 0;
  if (in >> extra) return std::nullopt;
  return out;
}

struct Options {
  SuiteConfig config;
  std::string norm_mode = "unit_norm";
  std::string kernel_sign = "plus";
  std::string prefactor_mode = "table";
  std::string format = "json";
  std::string out_path;

  std::string what;
  std::string identity;
  std::string state;
  std::string x;
  std::optional<double> t;
  std::optional<int> l;
  std::optional<double> a;
  std::optional<double> b;
};

void resolve_modes(Options& o) {
  const auto norm = parse_norm_mode(o.norm_mode);
  if (!norm) throw Error(ErrorCode::config_invalid, "unknown norm mode '" + o.norm_mode + "'");
  const auto sign = parse_kernel_sign(o.kernel_sign);
  if (!sign) throw Error(ErrorCode::config_invalid, "unknown kernel sign '" + o.kernel_sign + "'");
  const auto prefactor = parse_prefactor_mode(o.prefactor_mode);
  if (!prefactor) {
    throw Error(ErrorCode::config_invalid, "unknown prefactor mode '" + o.prefactor_mode + "'");
  }
  o.config.norm_mode = *norm;
  o.config.kernel_sign = *sign;
  o.config.prefactor_mode = *prefactor;
  o.config.validate();
}

/// Writes to the --out file when given, else to the data stream.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::io_error, "cannot open '" + o.out_path + "' for writing");
  file << text;
  file.close();
  if (!file) throw Error(ErrorCode::io_error, "failed writing '" + o.out_path + "'");
}

class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) { row(header); }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) text_ += ',';
      text_ += cells[i];
    }
    text_ += '\n';
  }
  void row(const std::vector<double>& cells) {
    std::vector<std::string> formatted;
    formatted.reserve(cells.size());
    for (double v : cells) formatted.push_back(format_double(v == 0.0 ? 0.0 : v));
    row(formatted);
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

std::vector<double> xi_grid(const SuiteConfig& c) {
  std::vector<double> grid(static_cast<std::size_t>(c.grid_points));
  for (int i = 0; i < c.grid_points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        -c.grid_extent + 2.0 * c.grid_extent * i / (c.grid_points - 1);
  }
  // The symmetric grid has an exact zero in the middle for odd counts.
  if (c.grid_points % 2 == 1) grid[static_cast<std::size_t>(c.grid_points / 2)] = 0.0;
  return grid;
}

void require_omega(const SuiteConfig& c, const std::string& what) {
  if (!c.params.confining()) {
    throw Error(ErrorCode::config_invalid, "tabulate " + what + " requires omega > 0");
  }
}

std::string tabulate(const Options& o) {
  const SuiteConfig& c = o.config;
  if (o.what == "phi" || o.what == "theta") {
    require_omega(c, o.what);
    const bool is_phi = o.what == "phi";
    std::vector<std::string> header{is_phi ? "x" : "zeta"};
    for (int l = 0; l <= c.l_max; ++l) {
      header.push_back((is_phi ? "phi_" : "theta_") + std::to_string(l));
    }
    Csv csv(header);
    const double unit = 1.0 / c.params.xi_scale();
    for (double xi : xi_grid(c)) {
      std::vector<double> row{is_phi ? xi * unit : xi};
      for (int l = 0; l <= c.l_max; ++l) {
        row.push_back(is_phi ? phi(l, xi * unit, c.params, c.norm_mode, c.l_max)
                             : theta(l, xi * unit, c.params, c.norm_mode, c.l_max));
      }
      csv.row(row);
    }
    return csv.text();
  }
  if (o.what == "psi_slice") {
    require_omega(c, o.what);
    // psi_(l,0,0) along the x_1 axis at time t.
    const double t = o.t.value_or(0.0);
    std::vector<std::string> header{"x"};
    for (int l = 0; l <= c.l_max; ++l) {
      const std::string label = "psi_" + std::to_string(l) + "_0_0";
      header.push_back(label + "_re");
      header.push_back(label + "_im");
    }
    Csv csv(header);
    const double unit = 1.0 / c.params.xi_scale();
    for (double xi : xi_grid(c)) {
      std::vector<double> row{xi * unit};
      for (int l = 0; l <= c.l_max; ++l) {
        const cplx v = psi_real(StateLabel(l, 0, 0), {xi * unit, 0.0, 0.0}, t, c.params,
                                c.norm_mode, c.l_max);
        row.push_back(v.real());
        row.push_back(v.imag());
      }
      csv.row(row);
    }
    return csv.text();
  }
  if (o.what == "sb_compare") {
    const int l_top = std::min(c.l_max, kMaxTransformLevel);
    std::vector<std::string> header{"a"};
    for (int l = 0; l <= l_top; ++l) {
      const std::string suffix = "_" + std::to_string(l);
      header.insert(header.end(),
                    {"quadrature" + suffix, "closed_form" + suffix, "difference" + suffix});
    }
    Csv csv(header);
    for (int i = 0; i < c.grid_points; ++i) {
      const double a = -2.0 + 4.0 * i / (c.grid_points - 1);
      std::vector<double> row{a};
      for (int l = 0; l <= l_top; ++l) {
        const double q = sb_transform(l, a, c.kernel_sign, std::max(c.quad_order, l + 30));
        const double closed = sb_closed_form(l, a, c.kernel_sign);
        row.insert(row.end(), {q, closed, q - closed});
      }
      csv.row(row);
    }
    return csv.text();
  }
  throw Error(ErrorCode::config_invalid,
              "unknown table '" + o.what + "'; available: phi, psi_slice, theta, sb_compare");
}

CheckArgs check_args(const Options& o) {
  CheckArgs args;
  if (!o.state.empty()) {
    const auto s = parse_triple<int>(o.state);
    if (!s) throw Error(ErrorCode::config_invalid, "--state expects l1,l2,l3");
    args.state = StateLabel((*s)[0], (*s)[1], (*s)[2]);
  }
  if (!o.x.empty()) {
    const auto x = parse_triple<double>(o.x);
    if (!x) throw Error(ErrorCode::config_invalid, "--x expects x1,x2,x3");
    args.x = *x;
  }
  args.t = o.t;
  args.l = o.l;
  args.a = o.a;
  args.b = o.b;
  return args;
}

void add_common_flags(CLI::App& app, Options& o) {
  auto& p = o.config.params;
  app.add_option("--hbar", p.hbar, "Reduced Planck constant")->capture_default_str();
  app.add_option("--mass", p.mass, "Particle mass")->capture_default_str();
  app.add_option("--omega", p.omega, "Angular frequency")->capture_default_str();
  app.add_option("--lmax", o.config.l_max, "Highest Hermite degree")->capture_default_str();
  app.add_option("--grid-extent", o.config.grid_extent, "Grid half-width in xi units")
      ->capture_default_str();
  app.add_option("--grid-points", o.config.grid_points, "Grid points per axis")
      ->capture_default_str();
  app.add_option("--quad-order", o.config.quad_order, "Gauss quadrature order")
      ->capture_default_str();
  app.add_option("--tolerance-scale", o.config.tolerance_scale,
                 "Multiplier applied to every check tolerance")
      ->capture_default_str();
  app.add_option("--norm-mode", o.norm_mode, "unit_norm | paper_norm")->capture_default_str();
  app.add_option("--kernel-sign", o.kernel_sign, "plus | minus")->capture_default_str();
  app.add_option("--prefactor-mode", o.prefactor_mode, "table | paper")->capture_default_str();
  app.add_option("--seed", o.config.seed, "Sampling seed")->capture_default_str();
  app.add_option("--format", o.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Conformal-coordinate harmonic oscillator verification", "qho"};
  app.require_subcommand(1);
  add_common_flags(app, o);

  auto* verify = app.add_subcommand("verify", "Run every check and write the report");
  verify->fallthrough();

  auto* tab = app.add_subcommand("tabulate", "Write a CSV table of function values");
  tab->fallthrough();
  tab->add_option("what", o.what, "phi | psi_slice | theta | sb_compare")->required();
  tab->add_option("--t", o.t, "Time for psi_slice");

  auto* check = app.add_subcommand("check", "Run one identity with verbose output");
  check->fallthrough();
  check->add_option("identity", o.identity, "Identity name")->required();
  check->add_option("--state", o.state, "State label l1,l2,l3");
  check->add_option("--x", o.x, "Point x1,x2,x3");
  check->add_option("--t", o.t, "Time");
  check->add_option("--l", o.l, "Single-axis level");
  check->add_option("--a", o.a, "Bargmann variable");
  check->add_option("--b", o.b, "Conjugate variable");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qho: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    resolve_modes(o);
    if (verify->parsed()) {
      const SuiteReport report = run_suite(o.config);
      emit(o, o.format == "json" ? report.to_json() : report.to_text(), out);
      return report.all_passed() ? kExitOk : kExitFailures;
    }
    if (tab->parsed()) {
      emit(o, tabulate(o), out);
      return kExitOk;
    }
    const CheckReport report = run_identity(o.identity, o.config, check_args(o));
    emit(o, o.format == "json" ? to_json(report) : to_text(report, true), out);
    return report.passed || report.skipped ? kExitOk : kExitFailures;
  } catch (const Error& e) {
    err << "qho: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qho::cli
