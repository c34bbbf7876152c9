#include "qho/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "qho/conformal.hpp"
#include "qho/error.hpp"
#include "qho/hermite.hpp"
#include "qho/numerics.hpp"

namespace qho {

using namespace std::complex_literals;

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

double SampleRng::uniform(double lo, double hi) {
  // 53 random mantissa bits; independent of the standard library's
  // distribution implementation.
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

void SuiteConfig::validate() const {
  params.validate();
  auto fail = [](const std::string& message) {
    throw Error(ErrorCode::config_invalid, message);
  };
  if (l_max < 0 || l_max > kDefaultHermiteLMax) fail("lmax must be in [0, 64]");
  if (!(grid_extent > 0.0) || !std::isfinite(grid_extent)) fail("grid extent must be positive");
  if (grid_points < 2) fail("grid needs at least 2 points");
  if (quad_order < 1 || quad_order + 10 > numerics::kMaxQuadratureOrder) {
    fail("quadrature order must be in [1, 246]");
  }
  if (!(tolerance_scale >= 0.0) || !std::isfinite(tolerance_scale)) {
    fail("tolerance scale must be non-negative");
  }
}

ConfigSnapshot SuiteConfig::snapshot() const {
  return {
      {"hbar", params.hbar},
      {"mass", params.mass},
      {"omega", params.omega},
      {"lmax", static_cast<std::int64_t>(l_max)},
      {"grid_extent", grid_extent},
      {"grid_points", static_cast<std::int64_t>(grid_points)},
      {"quad_order", static_cast<std::int64_t>(quad_order)},
      {"tolerance_scale", tolerance_scale},
      {"norm_mode", std::string(to_string(norm_mode))},
      {"kernel_sign", std::string(to_string(kernel_sign))},
      {"prefactor_mode", std::string(to_string(prefactor_mode))},
      {"seed", static_cast<std::int64_t>(seed)},
  };
}

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
const char* const kNeedsOmega = "requires omega > 0";

/// Physical length of one xi unit (1 when there is no oscillator scale).
double length_unit(const OscillatorParams& p) {
  return p.confining() ? 1.0 / p.xi_scale() : 1.0;
}

/// Energy used for conformal-map checks: the ground-state energy, or a free
/// particle with E = 1.5 hbar per unit time when omega = 0.
double probe_energy(const OscillatorParams& p) {
  return p.confining() ? 1.5 * p.hbar * p.omega : 1.5 * p.hbar;
}

std::vector<StateLabel> states_up_to(int n_max) {
  std::vector<StateLabel> states;
  for (int n = 0; n <= n_max; ++n) {
    for (int l1 = n; l1 >= 0; --l1) {
      for (int l2 = n - l1; l2 >= 0; --l2) states.emplace_back(l1, l2, n - l1 - l2);
    }
  }
  return states;
}

Vec3 random_point(SampleRng& rng, double extent_xi, const OscillatorParams& p) {
  const double unit = length_unit(p);
  return {rng.uniform(-extent_xi, extent_xi) * unit, rng.uniform(-extent_xi, extent_xi) * unit,
          rng.uniform(-extent_xi, extent_xi) * unit};
}

std::vector<RealCoordinates> random_events(SampleRng& rng, int count, double extent_xi,
                                           const OscillatorParams& p) {
  std::vector<RealCoordinates> events;
  events.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Vec3 x = random_point(rng, extent_xi, p);
    events.push_back({x, rng.uniform(-5.0, 5.0)});
  }
  return events;
}

std::vector<Vec3> cube_grid(double extent_xi, int points, const OscillatorParams& p) {
  const double unit = length_unit(p);
  std::vector<double> axis(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    axis[static_cast<std::size_t>(i)] =
        (-extent_xi + 2.0 * extent_xi * i / (points - 1)) * unit;
  }
  std::vector<Vec3> grid;
  grid.reserve(axis.size() * axis.size() * axis.size());
  for (double a : axis) {
    for (double b : axis) {
      for (double c : axis) grid.push_back({a, b, c});
    }
  }
  return grid;
}

/// Worst of several partial reports, under one name.
CheckReport aggregate(std::string name, std::string anchor,
                      const std::vector<CheckReport>& parts, double tolerance) {
  double worst = 0.0;
  std::string worst_name;
  int failed = 0;
  for (const auto& part : parts) {
    if (part.skipped) continue;
    if (!(part.measured <= worst) || worst_name.empty()) {
      if (!(part.measured <= worst)) worst = part.measured;
      if (worst_name.empty() || part.measured >= worst) worst_name = part.name;
    }
    if (!part.passed) ++failed;
  }
  if (std::isnan(worst)) worst = kInfinity;
  auto report = CheckReport::make(std::move(name), std::move(anchor), worst, tolerance);
  report.detail("parts", static_cast<std::int64_t>(parts.size()))
      .detail("worst_part", worst_name)
      .detail("parts_failed_at_own_tolerance", static_cast<std::int64_t>(failed));
  return report;
}

// ---------------------------------------------------------------- numerics

CheckReport check_quadrature_exactness(const SuiteConfig& c) {
  double worst = 0.0;
  for (auto family : {numerics::QuadratureFamily::gauss_hermite,
                      numerics::QuadratureFamily::gauss_laguerre}) {
    const auto& rule = numerics::cached_rule(family, c.quad_order);
    for (int degree = 0; degree <= 2 * c.quad_order - 1; ++degree) {
      double sum = 0.0;
      double magnitude = 0.0;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double term = rule.weights[j] * std::pow(rule.nodes[j], degree);
        sum += term;
        magnitude += std::abs(term);
      }
      double exact = 0.0;
      if (family == numerics::QuadratureFamily::gauss_hermite) {
        exact = degree % 2 == 1 ? 0.0 : std::tgamma(0.5 * (degree + 1));
      } else {
        exact = std::tgamma(degree + 1.0);
      }
      worst = std::max(worst, std::abs(sum - exact) / magnitude);
    }
  }
  auto r = CheckReport::make("quadrature-exactness",
                             "Gauss rule of order N integrates x^d exactly for d <= 2N-1",
                             worst, 1e-12);
  r.detail("order", static_cast<std::int64_t>(c.quad_order));
  return r;
}

CheckReport check_finite_difference_order(const SuiteConfig&) {
  // exp at x = 1: every derivative equals e.
  double worst = 0.0;
  std::vector<std::pair<std::string, DetailValue>> orders;
  for (int levels = 0; levels <= 2; ++levels) {
    const double h = levels == 2 ? 0.2 : 0.05;
    auto error = [&](double step) {
      numerics::StencilSpec spec{step, levels, 1};
      return std::abs(numerics::differentiate([](double x) { return std::exp(x); }, 1.0, spec)
                          .value -
                      std::numbers::e);
    };
    const double order = numerics::convergence_order(error(h), error(0.5 * h));
    worst = std::max(worst, std::abs(order - (2.0 + 2.0 * levels)));
    orders.emplace_back("order_levels_" + std::to_string(levels), order);
  }
  auto r = CheckReport::make("finite-difference-order",
                             "Richardson level k converges at order 2 + 2k", worst, 0.3);
  for (auto& [k, v] : orders) r.detail(k, v);
  return r;
}

// ---------------------------------------------------------------- hermite

CheckReport check_hermite_recurrence(const SuiteConfig&) {
  // Exact rational evaluation of the integer-coefficient polynomial at
  // dyadic points, against the floating recurrence. The error is measured
  // against sum |c_k x^k|, the natural floating-point scale of H_l(x).
  double worst = 0.0;
  for (int l = 0; l <= 20; ++l) {
    const HermitePoly poly = hermite_poly(l);
    for (int k = -20; k <= 20; ++k) {
      const exact::Rational x(k, 4);
      exact::Rational value = 0;
      double magnitude = 0.0;
      for (const auto& [p, coefficient] : poly.coefficients.terms()) {
        exact::Rational term = coefficient;
        for (int i = 0; i < p; ++i) term *= x;
        value += term;
        magnitude += std::abs(term.convert_to<double>());
      }
      const double recurrence = hermite_eval(l, k / 4.0);
      worst = std::max(worst, std::abs(recurrence - value.convert_to<double>()) / magnitude);
    }
  }
  return CheckReport::make("hermite-recurrence",
                           "H_{l+1} = 2x H_l - 2l H_{l-1} matches exact coefficients, l <= 20",
                           worst, 1e-12);
}

CheckReport check_hermite_orthogonality(const SuiteConfig& c) {
  const auto& rule = numerics::cached_rule(numerics::QuadratureFamily::gauss_hermite,
                                           std::max(c.quad_order, 13));
  double worst = 0.0;
  for (int l = 0; l <= 12; ++l) {
    for (int m = 0; m <= 12; ++m) {
      if (l == m) continue;
      const double value =
          rule.integrate([&](double x) { return hermite_eval(l, x) * hermite_eval(m, x); });
      const double norm = std::sqrt(std::sqrt(std::numbers::pi) * std::ldexp(1.0, l) *
                                    std::tgamma(l + 1.0) * std::sqrt(std::numbers::pi) *
                                    std::ldexp(1.0, m) * std::tgamma(m + 1.0));
      worst = std::max(worst, std::abs(value) / norm);
    }
  }
  return CheckReport::make("hermite-orthogonality",
                           "int H_l H_m exp(-x^2) dx = 0 for l != m <= 12", worst, 1e-9);
}

// ---------------------------------------------------------------- eigenfunctions

CheckReport check_orthonormality(const SuiteConfig& c) {
  const std::string anchor = "<phi_l, phi_m> = delta_lm (unit_norm), l, m <= 10";
  if (!c.params.confining()) return CheckReport::skip("eigenfunction-orthonormality", anchor, kNeedsOmega);
  const auto& rule =
      numerics::cached_rule(numerics::QuadratureFamily::gauss_hermite, c.quad_order);
  const double dx = length_unit(c.params);
  double worst = 0.0;
  for (int l = 0; l <= 10; ++l) {
    for (int m = 0; m <= 10; ++m) {
      const double kk = k_l(l, c.params) * k_l(m, c.params);
      const double value =
          kk * dx *
          rule.integrate([&](double xi) { return hermite_eval(l, xi) * hermite_eval(m, xi); });
      worst = std::max(worst, std::abs(value - (l == m ? 1.0 : 0.0)));
    }
  }
  auto r = CheckReport::make("eigenfunction-orthonormality", anchor, worst, 1e-9);
  r.detail("quadrature_order", static_cast<std::int64_t>(c.quad_order));
  return r;
}

CheckReport check_norm_modes(const SuiteConfig& c) {
  const std::string anchor = "phi_l(paper_norm) / phi_l(unit_norm) = (2 pi)^{1/4}";
  if (!c.params.confining()) return CheckReport::skip("norm-mode-ratio", anchor, kNeedsOmega);
  const double expected = std::pow(2.0 * std::numbers::pi, 0.25);
  const double unit = length_unit(c.params);
  double worst = 0.0;
  for (int l = 0; l <= c.l_max; ++l) {
    for (int i = 0; i < c.grid_points; ++i) {
      const double x = (-c.grid_extent + 2.0 * c.grid_extent * i / (c.grid_points - 1)) * unit;
      const double u = phi(l, x, c.params, NormMode::unit_norm);
      if (u == 0.0) continue;
      worst = std::max(worst, std::abs(phi(l, x, c.params, NormMode::paper_norm) / u / expected - 1.0));
    }
  }
  const auto& rule =
      numerics::cached_rule(numerics::QuadratureFamily::gauss_hermite, c.quad_order);
  const double k0 = k_l(0, c.params, NormMode::paper_norm);
  const double paper_integral = k0 * k0 * unit * rule.integrate([](double) { return 1.0; });
  auto r = CheckReport::make("norm-mode-ratio", anchor, worst, 1e-12);
  r.detail("paper_norm_integral_phi0", paper_integral)
      .detail("sqrt_2pi", std::sqrt(2.0 * std::numbers::pi));
  return r;
}

CheckReport check_node_count(const SuiteConfig& c) {
  const std::string anchor = "phi_l has exactly l real zeros";
  if (!c.params.confining()) return CheckReport::skip("eigenfunction-nodes", anchor, kNeedsOmega);
  const double unit = length_unit(c.params);
  int mismatches = 0;
  for (int l = 0; l <= c.l_max; ++l) {
    int changes = 0;
    int last_sign = 0;
    for (int i = 0; i < c.grid_points; ++i) {
      const double x = (-c.grid_extent + 2.0 * c.grid_extent * i / (c.grid_points - 1)) * unit;
      const double v = phi(l, x, c.params, c.norm_mode);
      const int sign = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
      if (sign == 0) continue;
      if (last_sign != 0 && sign != last_sign) ++changes;
      last_sign = sign;
    }
    if (changes != l) ++mismatches;
  }
  return CheckReport::make("eigenfunction-nodes", anchor, mismatches, 0.0);
}

double state_extent(const StateLabel& s) { return 3.0 + std::sqrt(2.0 * s.total() + 1.0); }

CheckReport check_schrodinger(const SuiteConfig& c, bool analytic) {
  const std::string name =
      analytic ? "schrodinger-residual-analytic" : "schrodinger-residual-fd";
  const std::string anchor = "-(hbar^2/2m) lap psi + (1/2) m omega^2 x^2 psi = E psi";
  if (!c.params.confining()) return CheckReport::skip(name, anchor, kNeedsOmega);
  std::vector<CheckReport> parts;
  for (const auto& state : states_up_to(4)) {
    const Eigenfunction3D psi{state, c.params, c.norm_mode};
    const double energy = psi.energy().value;
    const Field field = make_numeric_field([&psi](const Vec3& x, double t) { return psi(x, t); });
    double worst = 0.0;
    double scale = 0.0;
    constexpr double t = 0.3;
    for (const auto& x : cube_grid(state_extent(state), 21, c.params)) {
      const cplx value = psi(x, t);
      cplx h_psi;
      if (analytic) {
        h_psi = -(c.params.hbar * c.params.hbar / (2.0 * c.params.mass)) * psi.laplacian(x, t) +
                potential_energy(x, c.params) * value;
      } else {
        h_psi = real_hamiltonian(field, x, t, c.params);
      }
      worst = std::max(worst, std::abs(h_psi - energy * value));
      scale = std::max(scale, std::abs(energy * value));
    }
    parts.push_back(CheckReport::make(state.to_string(), anchor, worst / scale, 0.0));
  }
  auto r = aggregate(name, anchor, parts, analytic ? 1e-7 : 1e-5);
  r.detail("grid", std::string("21^3 over |xi| <= 3 + sqrt(2n+1), n <= 4"));
  return r;
}

CheckReport check_time_derivative(const SuiteConfig& c) {
  const std::string anchor = "i hbar d psi/dt = E psi";
  if (!c.params.confining()) return CheckReport::skip("time-derivative", anchor, kNeedsOmega);
  SampleRng rng(c.seed, 7);
  double worst = 0.0;
  for (const auto& state : states_up_to(4)) {
    const Eigenfunction3D psi{state, c.params, c.norm_mode};
    const double energy = psi.energy().value;
    const Field field = make_numeric_field([&psi](const Vec3& x, double t) { return psi(x, t); });
    const DerivativeOperator d_dt{DerivativeKind::d_ds, 0, OperatorForm::chain_rule, energy,
                                  c.params};
    double diff = 0.0, scale = 0.0;
    for (const auto& p : random_events(rng, 20, 3.0, c.params)) {
      const cplx lhs = 1i * c.params.hbar * apply_derivative(d_dt, field, p.x, p.t);
      const cplx rhs = energy * psi(p.x, p.t);
      diff = std::max(diff, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    worst = std::max(worst, diff / scale);
  }
  return CheckReport::make("time-derivative", anchor, worst, 1e-8);
}

// ---------------------------------------------------------------- conformal

CheckReport check_roundtrip(const SuiteConfig& c) {
  SampleRng rng(c.seed, 11);
  const double energy = probe_energy(c.params);
  double worst = 0.0;
  int isometry_violations = 0;
  constexpr int kPoints = 10000;
  for (int i = 0; i < kPoints; ++i) {
    const Vec3 x = random_point(rng, 5.0, c.params);
    const double t = rng.uniform(-10.0, 10.0);
    const ConformalPoint fwd = forward_map(x, t, energy, c.params);
    const ConformalPoint conj = conjugate_map(x, t, energy, c.params);
    if (fwd.z != x || conj.z != x || fwd.s != std::conj(conj.s)) ++isometry_violations;
    for (const RealCoordinates& back :
         {inverse_map(fwd.z, fwd.s, energy, c.params),
          inverse_conjugate_map(conj.z, conj.s, energy, c.params)}) {
      double scale = std::abs(t);
      double diff = std::abs(back.t - t);
      for (std::size_t a = 0; a < 3; ++a) {
        scale = std::max(scale, std::abs(x[a]));
        diff = std::max(diff, std::abs(back.x[a] - x[a]));
      }
      worst = std::max(worst, scale > 0.0 ? diff / scale : diff);
    }
  }
  auto r = CheckReport::make("conformal-roundtrip",
                             "inverse(z = x, s = t -+ i (m omega/2E) x^2) = (x, t)",
                             worst + isometry_violations, 1e-15);
  r.detail("points", static_cast<std::int64_t>(kPoints))
      .detail("isometry_violations", static_cast<std::int64_t>(isometry_violations))
      .detail("energy", energy);
  return r;
}

CheckReport check_omega_zero_map(const SuiteConfig& c) {
  OscillatorParams free = c.params;
  free.omega = 0.0;
  SampleRng rng(c.seed, 13);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vec3 x{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const double t = rng.uniform(-10.0, 10.0);
    const ConformalPoint p = forward_map(x, t, rng.uniform(0.1, 10.0), free);
    if (p.z != x || p.s.real() != t || p.s.imag() != 0.0) ++violations;
  }
  auto r = CheckReport::make("omega-zero-map", "omega = 0 gives z = x, s = t exactly",
                             violations, 0.0);
  return r;
}

CheckReport check_omega_continuity(const SuiteConfig& c) {
  const Vec3 x{0.7, -1.1, 0.4};
  const double energy = 2.0;
  auto slope = [&](double omega) {
    OscillatorParams p = c.params;
    p.omega = omega;
    return forward_map(x, 0.0, energy, p).s.imag() / omega;
  };
  const double reference = slope(1.0);
  double worst = 0.0;
  for (double omega : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
    worst = std::max(worst, std::abs(slope(omega) / reference - 1.0));
  }
  return CheckReport::make("omega-continuity", "Im(s) -> 0 linearly as omega -> 0", worst,
                           1e-12);
}

CheckReport check_conformal_eigenfunctions(const SuiteConfig& c) {
  const std::string anchor = "theta(z) tau(s) at (z, s) = map(x, t) equals psi(x, t)";
  if (!c.params.confining()) return CheckReport::skip("conformal-eigenfunctions", anchor, kNeedsOmega);
  SampleRng rng(c.seed, 17);
  std::vector<CheckReport> parts;
  for (const auto& state : states_up_to(4)) {
    const double energy = energy_of(state, c.params).value;
    double diff = 0.0, scale = 0.0;
    for (const auto& p : random_events(rng, 40, 4.0, c.params)) {
      const ConformalPoint m = forward_map(p.x, p.t, energy, c.params);
      const cplx real = psi_real(state, p.x, p.t, c.params, c.norm_mode);
      const cplx conformal = psi_conformal(state, m.z, m.s, c.params, c.norm_mode);
      diff = std::max(diff, std::abs(real - conformal));
      scale = std::max(scale, std::abs(real));
    }
    parts.push_back(CheckReport::make(state.to_string(), anchor, diff / scale, 0.0));
  }
  return aggregate("conformal-eigenfunctions", anchor, parts, 1e-12);
}

CheckReport check_polynomial_growth(const SuiteConfig& c) {
  const std::string anchor = "theta_2(z) / z^2 bounded for |zeta| >= 10 (no Gaussian factor)";
  if (!c.params.confining()) return CheckReport::skip("theta-polynomial-growth", anchor, kNeedsOmega);
  const double unit = length_unit(c.params);
  // theta_2 = k_2 (4 zeta^2 - 2): theta_2 / (k_2 zeta^2) lies in [3.98, 4].
  double worst = 0.0;
  for (double zeta = 10.0; zeta <= 1e4; zeta *= 1.5) {
    for (double sign : {-1.0, 1.0}) {
      const double z = sign * zeta * unit;
      const double ratio = theta(2, z, c.params, c.norm_mode) /
                           (k_l(2, c.params, c.norm_mode) * zeta * zeta);
      worst = std::max(worst, std::max(0.0, 3.98 - ratio) + std::max(0.0, ratio - 4.0));
    }
  }
  return CheckReport::make("theta-polynomial-growth", anchor, worst, 0.0);
}

CheckReport check_coordinate_independence(const SuiteConfig& c) {
  SampleRng rng(c.seed, 19);
  const auto events = random_events(rng, 100, 3.0, c.params);
  return coordinate_independence_check(c.params, probe_energy(c.params), events, 1e-10);
}

CheckReport check_chain_rule_forms(const SuiteConfig& c) {
  const std::string anchor =
      "d/dx_i + i (m omega x_i/E) d/dt = d/dx_i + (m omega/hbar) x_i on E-eigenstates";
  if (!c.params.confining()) return CheckReport::skip("chain-rule-energy-substitution", anchor, kNeedsOmega);
  SampleRng rng(c.seed, 23);
  double worst = 0.0;
  for (const auto& state : states_up_to(4)) {
    const Eigenfunction3D psi{state, c.params, c.norm_mode};
    const double energy = psi.energy().value;
    Field numeric_t = make_field(psi);
    numeric_t.d_dt = nullptr;  // the chain-rule form must difference in t
    const Field analytic = make_field(psi);
    double diff = 0.0, scale = 0.0;
    for (const auto& p : random_events(rng, 10, 3.0, c.params)) {
      for (int axis = 0; axis < 3; ++axis) {
        for (auto kind : {DerivativeKind::d_dz, DerivativeKind::d_dz_star}) {
          const DerivativeOperator chain{kind, axis, OperatorForm::chain_rule, energy, c.params};
          const DerivativeOperator subst{kind, axis, OperatorForm::energy_substituted, energy,
                                         c.params};
          const cplx a = apply_derivative(chain, numeric_t, p.x, p.t);
          const cplx b = apply_derivative(subst, analytic, p.x, p.t);
          diff = std::max(diff, std::abs(a - b));
          scale = std::max(scale, std::abs(b));
        }
      }
    }
    worst = std::max(worst, diff / scale);
  }
  return CheckReport::make("chain-rule-energy-substitution", anchor, worst, 1e-8);
}

CheckReport check_complex_time_energy(const SuiteConfig& c) {
  const std::string anchor = "E psi = i hbar d psi/ds";
  if (!c.params.confining()) return CheckReport::skip("complex-time-energy", anchor, kNeedsOmega);
  SampleRng rng(c.seed, 29);
  double worst = 0.0;
  const numerics::StencilSpec spec{1e-3, 1, 1};
  for (const auto& state : states_up_to(4)) {
    const double energy = energy_of(state, c.params).value;
    double diff = 0.0, scale = 0.0;
    for (const auto& p : random_events(rng, 10, 3.0, c.params)) {
      const ConformalPoint m = forward_map(p.x, p.t, energy, c.params);
      // psi(z, s) is holomorphic in s: differentiate along Re(s).
      auto along_s = [&](double ds) {
        return psi_conformal(state, m.z, m.s + ds, c.params, c.norm_mode);
      };
      numerics::StencilSpec scaled = spec;
      scaled.step = spec.step * c.params.hbar / energy;
      const cplx d_ds = numerics::differentiate(along_s, 0.0, scaled).value;
      const cplx rhs = energy * psi_conformal(state, m.z, m.s, c.params, c.norm_mode);
      diff = std::max(diff, std::abs(1i * c.params.hbar * d_ds - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    worst = std::max(worst, diff / scale);
  }
  return CheckReport::make("complex-time-energy", anchor, worst, 1e-8);
}

/// P(xi) exp(-alpha |xi|^2 / 2) exp(-i E t / hbar) with P a product of
/// random cubics.
Field random_test_function(SampleRng& rng, const OscillatorParams& p, double energy) {
  std::array<std::array<double, 4>, 3> coefficients{};
  for (auto& axis : coefficients) {
    for (auto& v : axis) v = rng.uniform(-1.0, 1.0);
  }
  const double alpha = rng.uniform(0.5, 1.5);
  const double scale = 1.0 / length_unit(p);
  return make_numeric_field([=](const Vec3& x, double t) {
    double value = 1.0;
    double r2 = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
      const double xi = scale * x[a];
      const auto& k = coefficients[a];
      value *= k[0] + xi * (k[1] + xi * (k[2] + xi * k[3]));
      r2 += xi * xi;
    }
    return value * std::exp(-0.5 * alpha * r2) * time_phase(energy, t, p);
  });
}

CheckReport check_operator_identity(const SuiteConfig& c) {
  const std::string anchor =
      "-(hbar^2/2m) sum d/dz_i* d/dz_i + (3/2) hbar omega = -(hbar^2/2m) lap + (1/2) m omega^2 x^2";
  SampleRng rng(c.seed, 31);
  const double energy = probe_energy(c.params);
  std::vector<CheckReport> parts;
  for (int f = 0; f < 20; ++f) {
    const Field u = random_test_function(rng, c.params, energy);
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < 8; ++i) {
      const Vec3 x = random_point(rng, 2.0, c.params);
      const double t = rng.uniform(-2.0, 2.0);
      const cplx lhs = conformal_hamiltonian(u, x, t, c.params);
      const cplx rhs = real_hamiltonian(u, x, t, c.params);
      diff = std::max(diff, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    parts.push_back(CheckReport::make("function-" + std::to_string(f), anchor, diff / scale, 0.0));
  }
  return aggregate("operator-identity", anchor, parts, 1e-6);
}

CheckReport check_concise_schrodinger(const SuiteConfig& c) {
  const std::string anchor = "-(hbar^2/2m) sum d/dz_i* d/dz_i psi + (3/2) hbar omega psi = E psi";
  if (!c.params.confining()) return CheckReport::skip("concise-schrodinger", anchor, kNeedsOmega);
  SampleRng rng(c.seed, 37);
  std::vector<CheckReport> parts;
  const auto before = potential_evaluations();
  for (const auto& state : states_up_to(4)) {
    const Eigenfunction3D psi{state, c.params, c.norm_mode};
    const double energy = psi.energy().value;
    const Field field = make_numeric_field([&psi](const Vec3& x, double t) { return psi(x, t); });
    double diff = 0.0, scale = 0.0;
    for (const auto& p : random_events(rng, 8, 2.5, c.params)) {
      const cplx lhs = conformal_hamiltonian(field, p.x, p.t, c.params);
      const cplx rhs = energy * psi(p.x, p.t);
      diff = std::max(diff, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    parts.push_back(CheckReport::make(state.to_string(), anchor, diff / scale, 0.0));
  }
  const auto potential_calls = potential_evaluations() - before;
  auto r = aggregate("concise-schrodinger", anchor, parts, 1e-6);
  r.detail("potential_evaluations", static_cast<std::int64_t>(potential_calls));
  return r;
}

CheckReport check_potential_free(const SuiteConfig& c) {
  const std::string anchor = "conformal form replaces the potential by the constant (3/2) hbar omega";
  const Eigenfunction3D psi{StateLabel(1, 0, 2), c.params, c.norm_mode};
  const Field field = make_numeric_field([&psi](const Vec3& x, double t) { return psi(x, t); });
  const Vec3 x{0.3, -0.2, 0.5};
  const auto start = potential_evaluations();
  (void)conformal_hamiltonian(field, x, 0.1, c.params);
  const auto conformal_calls = potential_evaluations() - start;
  (void)real_hamiltonian(field, x, 0.1, c.params);
  const auto real_calls = potential_evaluations() - start - conformal_calls;
  auto r = CheckReport::make("concise-form-potential-free", anchor,
                             static_cast<double>(conformal_calls), 0.0);
  r.detail("conformal_path_potential_calls", static_cast<std::int64_t>(conformal_calls))
      .detail("real_path_potential_calls", static_cast<std::int64_t>(real_calls))
      .detail("probe_live", real_calls > 0);
  if (real_calls == 0) r.measured = kInfinity, r.set_tolerance(0.0);
  return r;
}

CheckReport check_free_field(const SuiteConfig& c) {
  const std::string anchor = "omega = 0: conformal form reduces to -(hbar^2/2m) lap";
  OscillatorParams free = c.params;
  free.omega = 0.0;
  SampleRng rng(c.seed, 41);
  double worst = 0.0;
  for (int f = 0; f < 5; ++f) {
    const Field u = random_test_function(rng, free, 1.0);
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < 6; ++i) {
      const Vec3 x = random_point(rng, 2.0, free);
      const double t = rng.uniform(-2.0, 2.0);
      const cplx lhs = conformal_hamiltonian(u, x, t, free);
      const cplx rhs = real_hamiltonian(u, x, t, free);
      diff = std::max(diff, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    worst = std::max(worst, diff / scale);
  }
  return CheckReport::make("free-field-reduction", anchor, worst, 1e-6);
}

CrGrid cr_grid_for(const OscillatorParams&) { return CrGrid{}; }

std::vector<CheckReport> check_cauchy_riemann(const SuiteConfig& c) {
  const std::vector<std::string> names = {"cauchy-riemann-residual", "cauchy-riemann-order",
                                          "cauchy-riemann-second-order-form",
                                          "cauchy-riemann-linear", "cauchy-riemann-antiholomorphic"};
  const std::string anchor = "g_t = h_y, g_y = -h_t for tau(s) = exp(-i E s/hbar), s = t + iy";
  if (!c.params.confining()) {
    std::vector<CheckReport> skipped;
    for (const auto& n : names) skipped.push_back(CheckReport::skip(n, anchor, kNeedsOmega));
    return skipped;
  }
  const double energy = probe_energy(c.params);
  const auto params = c.params;
  const CrGrid grid = cr_grid_for(c.params);
  const CrAnalysis a =
      cr_analyze([&](cplx s) { return tau(energy, s, params); }, energy, params, grid);

  std::vector<CheckReport> out;
  auto residual = CheckReport::make(names[0], anchor, a.standard_fine,
                                   cr_truncation_envelope(energy, params, grid));
  residual.detail("residual_coarse", a.standard_coarse)
      .detail("step_fine", 0.5 * grid.step)
      .detail("swapped_pairing_residual", a.swapped_fine);
  out.push_back(residual);

  auto order = CheckReport::make(names[1], "standard Cauchy-Riemann residual converges at order 2",
                                 std::abs(a.standard_order - 2.0), 0.3);
  order.detail("convergence_order", a.standard_order);
  out.push_back(order);

  auto second = CheckReport::make(
      names[2], "tau_tt + (4E^2/(m omega)^2) tau_uu = 0, u = |x|^2",
      std::abs(a.second_order_order - 2.0), 0.3);
  second.detail("residual_fine", a.second_order_fine)
      .detail("residual_coarse", a.second_order_coarse)
      .detail("convergence_order", a.second_order_order);
  out.push_back(second);

  const CrAnalysis linear = cr_analyze([](cplx s) { return s; }, energy, params, grid);
  out.push_back(CheckReport::make(names[3], "tau(s) = s satisfies Cauchy-Riemann exactly",
                                  linear.standard_fine, 1e-12));

  const CrAnalysis anti = cr_analyze([](cplx s) { return std::conj(s); }, energy, params, grid);
  auto counter = CheckReport::make(names[4], "tau(s) = conj(s) violates Cauchy-Riemann by >= 1",
                                   std::max(0.0, 1.0 - anti.standard_min_fine), 0.0);
  counter.detail("min_residual", anti.standard_min_fine);
  out.push_back(counter);
  return out;
}

// ---------------------------------------------------------------- ladder

CheckReport check_ladder_state_algebra(const SuiteConfig&) {
  int failures = 0;
  for (const auto& state : states_up_to(6)) {
    for (int axis = 0; axis < 3; ++axis) {
      const std::int64_t l = state[axis];
      const auto up = ladder_state(state, axis, LadderDirection::raise);
      const auto up_down = ladder_state(*up.state, axis, LadderDirection::lower);
      if (up_down.state != state || up.coefficient_squared * up_down.coefficient_squared != (l + 1) * (l + 1)) {
        ++failures;
      }
      const auto down = ladder_state(state, axis, LadderDirection::lower);
      if (l == 0) {
        if (!down.annihilated() || down.coefficient_squared != 0) ++failures;
        continue;
      }
      const auto down_up = ladder_state(*down.state, axis, LadderDirection::raise);
      if (down_up.state != state || down.coefficient_squared * down_up.coefficient_squared != l * l) {
        ++failures;
      }
    }
  }
  return CheckReport::make("ladder-state-algebra",
                           "a |l> = sqrt(l) |l-1>, a^dagger |l> = sqrt(l+1) |l+1>", failures, 0.0);
}

CheckReport check_number_operator(const SuiteConfig& c) {
  const std::string anchor = "(sum_i a_i^dagger a_i + 3/2) psi = (E / hbar omega) psi, n <= 6";
  if (!c.params.confining()) return CheckReport::skip("number-operator", anchor, kNeedsOmega);
  const auto grid = cube_grid(0.5 * c.grid_extent, 9, c.params);
  std::vector<CheckReport> parts;
  for (const auto& state : states_up_to(6)) {
    parts.push_back(number_operator_check(state, c.params, grid, 1e-10, c.norm_mode));
  }
  return aggregate("number-operator", anchor, parts, 1e-10);
}

CheckReport check_commutators(const SuiteConfig& c) {
  const std::string anchor = "[a_i, a_j^dagger] = delta_ij, n <= 3";
  if (!c.params.confining()) return CheckReport::skip("ladder-commutator", anchor, kNeedsOmega);
  SampleRng rng(c.seed, 43);
  const auto events = random_events(rng, 30, 3.0, c.params);
  std::vector<CheckReport> parts;
  for (const auto& state : states_up_to(3)) {
    parts.push_back(commutator_check(state, c.params, events));
  }
  return aggregate("ladder-commutator", anchor, parts, 1e-10);
}

CheckReport check_representations(const SuiteConfig& c) {
  const std::string anchor = "real and conformal ladder operators agree at mapped points, n <= 4";
  if (!c.params.confining()) return CheckReport::skip("ladder-representations", anchor, kNeedsOmega);
  SampleRng rng(c.seed, 47);
  const auto events = random_events(rng, 30, 3.0, c.params);
  std::vector<CheckReport> parts;
  for (const auto& state : states_up_to(4)) {
    parts.push_back(representation_agreement_check(state, c.params, events));
  }
  return aggregate("ladder-representations", anchor, parts, 1e-10);
}

CheckReport check_adjointness(const SuiteConfig& c) {
  return adjointness_check(8, c.params, c.quad_order, 1e-9);
}

// ---------------------------------------------------------------- bargmann

const std::array<double, 7> kSbPoints = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0};

CheckReport check_sb_transform(const SuiteConfig& c) {
  double worst = 0.0;
  for (int l = 0; l <= 8; ++l) {
    for (double a : kSbPoints) {
      worst = std::max(worst, std::abs(sb_transform(l, a, c.kernel_sign, c.quad_order) -
                                       sb_closed_form(l, a, c.kernel_sign)));
    }
  }
  auto r = CheckReport::make("segal-bargmann",
                             "pi^{-1/4} int phi_l e^{(-xi^2-a^2)/2} e^{+-sqrt2 a xi} dxi = (+-1)^l a^l/sqrt(l!)",
                             worst, 1e-8);
  r.detail("kernel_sign", std::string(to_string(c.kernel_sign)));
  return r;
}

CheckReport check_sb_sign_relation(const SuiteConfig& c) {
  double worst = 0.0;
  for (int l = 0; l <= 8; ++l) {
    const double parity = l % 2 == 0 ? 1.0 : -1.0;
    for (double a : kSbPoints) {
      const double plus = sb_transform(l, a, KernelSign::plus, c.quad_order);
      const double minus = sb_transform(l, a, KernelSign::minus, c.quad_order);
      worst = std::max(worst, std::abs(minus - parity * plus));
    }
  }
  return CheckReport::make("segal-bargmann-kernel-sign",
                           "minus-sign kernel gives (-1)^l times the plus-sign transform", worst,
                           1e-8);
}

CheckReport check_sb_convergence(const SuiteConfig&) {
  double worst = 0.0;
  for (int l = 0; l <= 8; ++l) {
    for (double a : kSbPoints) {
      worst = std::max(worst, std::abs(sb_transform(l, a, KernelSign::plus, l + 30) -
                                       sb_transform(l, a, KernelSign::plus, l + 40)));
    }
  }
  return CheckReport::make("segal-bargmann-convergence",
                           "quadrature changes < 1e-11 from order l+30 to l+40", worst, 1e-11);
}

CheckReport check_conjugate_transform(const SuiteConfig& c) {
  const double prefactor = c.prefactor_mode == PrefactorMode::paper ? std::pow(std::numbers::pi, -0.25) : 1.0;
  double worst = 0.0;
  for (int l = 0; l <= 8; ++l) {
    for (double b : {1.0, 2.0, 3.0}) {
      const double value = conjugate_transform(l, b, c.prefactor_mode);
      worst = std::max(worst, std::abs(value / (prefactor * conjugate_closed_form(l, b)) - 1.0));
    }
  }
  auto r = CheckReport::make("conjugate-transform",
                             "int_0^inf (a^l/sqrt(l!)) e^{-ab} da = sqrt(l!)/b^{l+1}", worst, 1e-8);
  r.detail("prefactor_mode", std::string(to_string(c.prefactor_mode)));
  return r;
}

CheckReport check_prefactor_ratio(const SuiteConfig&) {
  const double ratio =
      conjugate_transform(3, 2.0, PrefactorMode::paper) / conjugate_transform(3, 2.0, PrefactorMode::table);
  const double expected = std::pow(std::numbers::pi, -0.25);
  auto r = CheckReport::make("conjugate-prefactor-ratio",
                             "paper-mode / table-mode conjugate transform = pi^{-1/4}",
                             std::abs(ratio - expected), 1e-10);
  r.detail("ratio", ratio).detail("pi^{-1/4}", expected);
  return r;
}

constexpr std::array<Table1Space, 3> kSpaces = {Table1Space::bargmann, Table1Space::conjugate,
                                                Table1Space::conformal};

std::vector<CheckReport> check_table1(const SuiteConfig& c) {
  std::vector<CheckReport> out;
  for (auto space : kSpaces) {
    std::vector<CheckReport> parts;
    for (int l = 0; l <= 6; ++l) {
      parts.push_back(table1_ladder_check(space, l, LadderDirection::raise));
      // The conjugate vacuum 1/b is not annihilated by b; lowering is
      // checked from l = 1 there.
      if (l > 0 || space != Table1Space::conjugate) {
        parts.push_back(table1_ladder_check(space, l, LadderDirection::lower));
      }
      parts.push_back(table1_commutator_check(space, l));
    }
    for (const auto& state : states_up_to(6)) {
      parts.push_back(table1_schrodinger_check(space, state));
    }
    auto r = aggregate("table1-" + std::string(to_string(space)),
                       "exact ladder action, [a, a^dagger] = 1 and number eigenvalue n + 3/2 in " +
                           std::string(to_string(space)) + " space",
                       parts, 0.0);
    out.push_back(r);
  }
  std::vector<CheckReport> lowering;
  for (int l = 1; l <= std::max(c.l_max, 6); ++l) {
    lowering.push_back(table1_ladder_check(Table1Space::conformal, l, LadderDirection::lower));
  }
  out.push_back(aggregate("conformal-lowering-coefficient",
                          "2^{-1/2} d/dzeta [k_l H_l] = sqrt(l) k_{l-1} H_{l-1} exactly", lowering,
                          0.0));
  return out;
}

// ---------------------------------------------------------------- registry

using CheckFn = std::function<std::vector<CheckReport>(const SuiteConfig&)>;

template <class F>
CheckFn single(F f) {
  return [f](const SuiteConfig& c) { return std::vector<CheckReport>{f(c)}; };
}

struct Registered {
  std::string fallback_name;
  CheckFn run;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = {
      {"quadrature-exactness", single(check_quadrature_exactness)},
      {"finite-difference-order", single(check_finite_difference_order)},
      {"hermite-recurrence", single(check_hermite_recurrence)},
      {"hermite-orthogonality", single(check_hermite_orthogonality)},
      {"eigenfunction-orthonormality", single(check_orthonormality)},
      {"norm-mode-ratio", single(check_norm_modes)},
      {"eigenfunction-nodes", single(check_node_count)},
      {"schrodinger-residual-analytic", single([](const SuiteConfig& c) { return check_schrodinger(c, true); })},
      {"schrodinger-residual-fd", single([](const SuiteConfig& c) { return check_schrodinger(c, false); })},
      {"time-derivative", single(check_time_derivative)},
      {"conformal-roundtrip", single(check_roundtrip)},
      {"omega-zero-map", single(check_omega_zero_map)},
      {"omega-continuity", single(check_omega_continuity)},
      {"conformal-eigenfunctions", single(check_conformal_eigenfunctions)},
      {"theta-polynomial-growth", single(check_polynomial_growth)},
      {"coordinate-independence", single(check_coordinate_independence)},
      {"chain-rule-energy-substitution", single(check_chain_rule_forms)},
      {"complex-time-energy", single(check_complex_time_energy)},
      {"operator-identity", single(check_operator_identity)},
      {"concise-schrodinger", single(check_concise_schrodinger)},
      {"concise-form-potential-free", single(check_potential_free)},
      {"free-field-reduction", single(check_free_field)},
      {"cauchy-riemann", check_cauchy_riemann},
      {"ladder-state-algebra", single(check_ladder_state_algebra)},
      {"number-operator", single(check_number_operator)},
      {"ladder-commutator", single(check_commutators)},
      {"ladder-representations", single(check_representations)},
      {"ladder-adjointness", single(check_adjointness)},
      {"segal-bargmann", single(check_sb_transform)},
      {"segal-bargmann-kernel-sign", single(check_sb_sign_relation)},
      {"segal-bargmann-convergence", single(check_sb_convergence)},
      {"conjugate-transform", single(check_conjugate_transform)},
      {"conjugate-prefactor-ratio", single(check_prefactor_ratio)},
      {"table1", check_table1},
  };
  return checks;
}

CheckReport failed_by_error(const std::string& name, const Error& e) {
  auto r = CheckReport::make(name, "evaluation raised an error", kInfinity, 0.0);
  r.detail("error", std::string(e.what()));
  return r;
}

void apply_scale(CheckReport& r, double scale) {
  if (!r.skipped) r.set_tolerance(r.tolerance * scale);
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  SuiteReport suite;
  suite.config = config.snapshot();
  for (const auto& check : registry()) {
    std::vector<CheckReport> reports;
    try {
      reports = check.run(config);
    } catch (const Error& e) {
      reports = {failed_by_error(check.fallback_name, e)};
    }
    for (auto& r : reports) {
      apply_scale(r, config.tolerance_scale);
      suite.checks.push_back(std::move(r));
    }
  }
  return suite;
}

// ---------------------------------------------------------------- single identities

namespace {

StateLabel state_or(const CheckArgs& args, StateLabel fallback) {
  return args.state.value_or(fallback);
}

CheckReport identity_roundtrip(const SuiteConfig& c, const CheckArgs& args) {
  const Vec3 x = args.x.value_or(Vec3{1.0, 2.0, 3.0});
  const double t = args.t.value_or(0.5);
  const double energy = args.state ? energy_of(*args.state, c.params).value : probe_energy(c.params);
  const ConformalPoint fwd = forward_map(x, t, energy, c.params);
  const ConformalPoint conj = conjugate_map(x, t, energy, c.params);
  const RealCoordinates back = inverse_map(fwd.z, fwd.s, energy, c.params);
  const RealCoordinates back_conj = inverse_conjugate_map(conj.z, conj.s, energy, c.params);
  double residual = std::max(std::abs(back.t - t), std::abs(back_conj.t - t));
  for (std::size_t a = 0; a < 3; ++a) {
    residual = std::max({residual, std::abs(back.x[a] - x[a]), std::abs(back_conj.x[a] - x[a])});
  }
  auto r = CheckReport::make("roundtrip", "inverse(forward(x, t)) = (x, t)", residual, 0.0);
  r.detail("energy", energy)
      .detail("rate_m_omega_over_2E", imaginary_time_rate(energy, c.params))
      .detail("s.re", fwd.s.real())
      .detail("s.im", fwd.s.imag())
      .detail("s_star.re", conj.s.real())
      .detail("s_star.im", conj.s.imag())
      .detail("recovered_t", back.t)
      .detail("recovered_t_conjugate", back_conj.t);
  return r;
}

CheckReport identity_operator(const SuiteConfig& c, const CheckArgs& args) {
  const StateLabel state = state_or(args, StateLabel(1, 0, 0));
  const Eigenfunction3D psi{state, c.params, c.norm_mode};
  const Field field = make_numeric_field([psi](const Vec3& x, double t) { return psi(x, t); });
  const double unit = length_unit(c.params);
  const Vec3 x = args.x.value_or(Vec3{0.3 * unit, -0.4 * unit, 0.5 * unit});
  const double t = args.t.value_or(0.2);
  const cplx lhs = conformal_hamiltonian(field, x, t, c.params);
  const cplx rhs = real_hamiltonian(field, x, t, c.params);
  const double residual = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
  auto r = CheckReport::make("operator-identity" + state.to_string(),
                             "-(hbar^2/2m) sum d/dz_i* d/dz_i psi + (3/2) hbar omega psi = "
                             "-(hbar^2/2m) lap psi + (1/2) m omega^2 x^2 psi",
                             residual, 1e-6);
  r.detail("lhs.re", lhs.real()).detail("lhs.im", lhs.imag())
      .detail("rhs.re", rhs.real()).detail("rhs.im", rhs.imag())
      .detail("E_psi.re", (psi.energy().value * psi(x, t)).real())
      .detail("E_psi.im", (psi.energy().value * psi(x, t)).imag());
  return r;
}

CheckReport identity_concise(const SuiteConfig& c, const CheckArgs& args) {
  const StateLabel state = state_or(args, StateLabel(1, 0, 0));
  const Eigenfunction3D psi{state, c.params, c.norm_mode};
  const Field field = make_numeric_field([psi](const Vec3& x, double t) { return psi(x, t); });
  const double unit = length_unit(c.params);
  const Vec3 x = args.x.value_or(Vec3{0.3 * unit, -0.4 * unit, 0.5 * unit});
  const double t = args.t.value_or(0.2);
  const auto before = potential_evaluations();
  const cplx lhs = conformal_hamiltonian(field, x, t, c.params);
  const auto calls = potential_evaluations() - before;
  const cplx rhs = psi.energy().value * psi(x, t);
  auto r = CheckReport::make("concise-schrodinger" + state.to_string(),
                             "-(hbar^2/2m) sum d/dz_i* d/dz_i psi + (3/2) hbar omega psi = E psi",
                             std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300), 1e-6);
  r.detail("lhs.re", lhs.real()).detail("lhs.im", lhs.imag())
      .detail("rhs.re", rhs.real()).detail("rhs.im", rhs.imag())
      .detail("potential_evaluations", static_cast<std::int64_t>(calls));
  return r;
}

CheckReport identity_schrodinger(const SuiteConfig& c, const CheckArgs& args) {
  const StateLabel state = state_or(args, StateLabel(1, 0, 0));
  const Eigenfunction3D psi{state, c.params, c.norm_mode};
  const double unit = length_unit(c.params);
  const Vec3 x = args.x.value_or(Vec3{0.3 * unit, -0.4 * unit, 0.5 * unit});
  const double t = args.t.value_or(0.2);
  const cplx kinetic = -(c.params.hbar * c.params.hbar / (2.0 * c.params.mass)) * psi.laplacian(x, t);
  const cplx potential = potential_energy(x, c.params) * psi(x, t);
  const cplx rhs = psi.energy().value * psi(x, t);
  auto r = CheckReport::make("schrodinger" + state.to_string(),
                             "-(hbar^2/2m) lap psi + (1/2) m omega^2 x^2 psi = E psi",
                             std::abs(kinetic + potential - rhs) / std::max(std::abs(rhs), 1e-300),
                             1e-7);
  r.detail("kinetic.re", kinetic.real()).detail("potential.re", potential.real())
      .detail("E_psi.re", rhs.real()).detail("E", psi.energy().value);
  return r;
}

CheckReport identity_cr_tau(const SuiteConfig& c, const CheckArgs& args) {
  const double energy = args.state ? energy_of(*args.state, c.params).value : probe_energy(c.params);
  const auto params = c.params;
  auto r = cr_residual([&](cplx s) { return tau(energy, s, params); }, energy, params, CrGrid{});
  r.name = "cr-tau";
  r.detail("energy", energy);
  return r;
}

CheckReport identity_coordinate_independence(const SuiteConfig& c, const CheckArgs& args) {
  const Vec3 x = args.x.value_or(Vec3{1.0, 1.0, 1.0});
  const RealCoordinates point{x, args.t.value_or(0.0)};
  const double energy = args.state ? energy_of(*args.state, c.params).value : probe_energy(c.params);
  return coordinate_independence_check(c.params, energy, std::span(&point, 1));
}

CheckReport identity_number(const SuiteConfig& c, const CheckArgs& args) {
  const auto grid = cube_grid(0.5 * c.grid_extent, 9, c.params);
  return number_operator_check(state_or(args, StateLabel(1, 2, 3)), c.params, grid, 1e-10, c.norm_mode);
}

CheckReport identity_commutator(const SuiteConfig& c, const CheckArgs& args) {
  SampleRng rng(c.seed, 43);
  const auto events = random_events(rng, 30, 3.0, c.params);
  return commutator_check(state_or(args, StateLabel(1, 0, 0)), c.params, events);
}

CheckReport identity_ladder(const SuiteConfig& c, const CheckArgs& args) {
  const StateLabel state = state_or(args, StateLabel(1, 0, 0));
  const double unit = length_unit(c.params);
  const RealCoordinates point{args.x.value_or(Vec3{0.3 * unit, -0.4 * unit, 0.5 * unit}),
                              args.t.value_or(0.2)};
  auto r = representation_agreement_check(state, c.params, std::span(&point, 1));
  if (r.skipped) return r;
  const double energy = energy_of(state, c.params).value;
  const ConformalPoint m = forward_map(point.x, point.t, energy, c.params);
  r.detail("z_s.im", m.s.imag());
  for (auto direction : {LadderDirection::lower, LadderDirection::raise}) {
    const std::string d(to_string(direction));
    const cplx real = ladder_apply_real(state, 0, direction, point.x, point.t, c.params);
    const cplx conformal = ladder_apply_conformal(state, 0, direction, m.z, m.s, c.params);
    const auto label = ladder_state(state, 0, direction);
    const cplx expected =
        label.annihilated()
            ? cplx{}
            : label.coefficient() * psi_real(*label.state, point.x, point.t, c.params) *
                  time_phase(energy - energy_of(*label.state, c.params).value, point.t, c.params);
    r.detail(d + "_axis1_real.re", real.real())
        .detail(d + "_axis1_conformal.re", conformal.real())
        .detail(d + "_axis1_from_labels.re", expected.real());
  }
  return r;
}

CheckReport identity_sb(const SuiteConfig& c, const CheckArgs& args) {
  const int l = args.l.value_or(2);
  const double a = args.a.value_or(1.0);
  const double value = sb_transform(l, a, c.kernel_sign, c.quad_order);
  const double closed = sb_closed_form(l, a, c.kernel_sign);
  auto r = CheckReport::make("segal-bargmann", "transform of phi_l at a equals a^l/sqrt(l!)",
                             std::abs(value - closed), 1e-8);
  r.detail("l", static_cast<std::int64_t>(l)).detail("a", a)
      .detail("quadrature", value).detail("closed_form", closed)
      .detail("kernel_sign", std::string(to_string(c.kernel_sign)));
  return r;
}

CheckReport identity_conjugate(const SuiteConfig& c, const CheckArgs& args) {
  const int l = args.l.value_or(0);
  const double b = args.b.value_or(2.0);
  const double table = conjugate_transform(l, b, PrefactorMode::table);
  const double paper = conjugate_transform(l, b, PrefactorMode::paper);
  const double selected = c.prefactor_mode == PrefactorMode::paper ? paper : table;
  const double closed = conjugate_closed_form(l, b);
  auto r = CheckReport::make("conjugate-transform", "int_0^inf (a^l/sqrt(l!)) e^{-ab} da = sqrt(l!)/b^{l+1}",
                             std::abs(table - closed), 1e-8);
  r.detail("l", static_cast<std::int64_t>(l)).detail("b", b)
      .detail("table_mode", table).detail("paper_mode", paper)
      .detail("selected_mode", std::string(to_string(c.prefactor_mode)))
      .detail("selected_value", selected).detail("closed_form", closed)
      .detail("paper_over_table", paper / table);
  return r;
}

CheckReport identity_table1(const SuiteConfig&, const CheckArgs& args) {
  const int l = args.l.value_or(3);
  std::vector<CheckReport> parts;
  for (auto space : kSpaces) {
    parts.push_back(table1_ladder_check(space, l, LadderDirection::raise));
    if (l > 0) parts.push_back(table1_ladder_check(space, l, LadderDirection::lower));
    parts.push_back(table1_commutator_check(space, l));
  }
  auto r = aggregate("table1-l" + std::to_string(l), "exact ladder action in every space", parts, 0.0);
  for (const auto& p : parts) {
    if (const auto* result = p.find_detail("result")) r.detail(p.name, *result);
  }
  return r;
}

using IdentityFn = CheckReport (*)(const SuiteConfig&, const CheckArgs&);

struct IdentityEntry {
  IdentityInfo info;
  IdentityFn run;
};

const std::vector<IdentityEntry>& identity_table() {
  static const std::vector<IdentityEntry> table = {
      {{"roundtrip", "forward/conjugate map and their inverses at --x, --t"}, identity_roundtrip},
      {{"eq17", "conformal operator identity on the eigenstate --state (alias of operator-identity)"}, identity_operator},
      {{"operator-identity", "conformal operator identity on the eigenstate --state"}, identity_operator},
      {{"concise", "concise conformal Schrodinger form for --state"}, identity_concise},
      {{"schrodinger", "real-coordinate Schrodinger residual for --state at --x"}, identity_schrodinger},
      {{"cr-tau", "Cauchy-Riemann residuals and convergence order of tau(s)"}, identity_cr_tau},
      {{"coordinate-independence", "cross derivatives of (z, s) at --x, --t"}, identity_coordinate_independence},
      {{"number-operator", "number operator eigenvalue for --state"}, identity_number},
      {{"commutator", "[a_i, a_j^dagger] = delta_ij on --state"}, identity_commutator},
      {{"ladder", "real vs conformal ladder operators on --state at --x, --t"}, identity_ladder},
      {{"sb", "Segal-Bargmann transform at --l, --a"}, identity_sb},
      {{"conjugate", "conjugate transform at --l, --b"}, identity_conjugate},
      {{"table1", "exact ladder algebra in all three spaces at --l"}, identity_table1},
  };
  return table;
}

}  // namespace

const std::vector<IdentityInfo>& registered_identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const auto& e : identity_table()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CheckReport run_identity(const std::string& name, const SuiteConfig& config,
                         const CheckArgs& args) {
  config.validate();
  for (const auto& e : identity_table()) {
    if (e.info.name != name) continue;
    auto r = e.run(config, args);
    apply_scale(r, config.tolerance_scale);
    return r;
  }
  std::string names;
  for (const auto& e : identity_table()) names += (names.empty() ? "" : ", ") + e.info.name;
  throw Error(ErrorCode::unknown_identity, "'" + name + "'; available: " + names);
}

}  // namespace qho
