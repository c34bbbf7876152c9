#include "qho/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qho/error.hpp"
#include "qho/numerics.hpp"

namespace qho {

std::string_view to_string(LadderDirection direction) {
  return direction == LadderDirection::lower ? "lower" : "raise";
}

std::string_view to_string(LadderRepresentation rep) {
  switch (rep) {
    case LadderRepresentation::real_x: return "real_x";
    case LadderRepresentation::conformal_zeta: return "conformal_zeta";
    case LadderRepresentation::bargmann_a: return "bargmann_a";
    case LadderRepresentation::conjugate_b: return "conjugate_b";
    case LadderRepresentation::state_label: return "state_label";
  }
  return "?";
}

double LadderResult::coefficient() const {
  return std::sqrt(static_cast<double>(coefficient_squared));
}

LadderResult ladder_state(const StateLabel& state, int axis, LadderDirection direction) {
  if (axis < 0 || axis > 2) throw Error(ErrorCode::domain_error, "axis must be 0, 1 or 2");
  const int l = state[axis];
  StateLabel next = state;
  if (direction == LadderDirection::lower) {
    if (l == 0) return {0, std::nullopt};
    next.l[static_cast<std::size_t>(axis)] = l - 1;
    return {l, next};
  }
  next.l[static_cast<std::size_t>(axis)] = l + 1;
  return {l + 1, next};
}

GaussHermiteSeries GaussHermiteSeries::hermite_gaussian(int degree, double coefficient) {
  GaussHermiteSeries s;
  s.add({coefficient, 0, degree});
  return s;
}

void GaussHermiteSeries::add(const GaussHermiteTerm& term) {
  for (auto& existing : terms_) {
    if (existing.power == term.power && existing.degree == term.degree) {
      existing.coefficient += term.coefficient;
      return;
    }
  }
  terms_.push_back(term);
}

GaussHermiteSeries GaussHermiteSeries::d_dxi() const {
  // d/dxi [xi^p H_l e^{-xi^2/2}] = (p xi^{p-1} H_l + 2l xi^p H_{l-1} - xi^{p+1} H_l) e^{-xi^2/2}
  GaussHermiteSeries out;
  for (const auto& t : terms_) {
    if (t.power > 0) out.add({t.coefficient * t.power, t.power - 1, t.degree});
    if (t.degree > 0) out.add({t.coefficient * 2.0 * t.degree, t.power, t.degree - 1});
    out.add({-t.coefficient, t.power + 1, t.degree});
  }
  return out;
}

GaussHermiteSeries GaussHermiteSeries::times_xi() const {
  GaussHermiteSeries out;
  for (const auto& t : terms_) out.add({t.coefficient, t.power + 1, t.degree});
  return out;
}

GaussHermiteSeries GaussHermiteSeries::scaled(double factor) const {
  GaussHermiteSeries out = *this;
  for (auto& t : out.terms_) t.coefficient *= factor;
  return out;
}

GaussHermiteSeries operator+(const GaussHermiteSeries& a, const GaussHermiteSeries& b) {
  GaussHermiteSeries out = a;
  for (const auto& t : b.terms_) out.add(t);
  return out;
}

double GaussHermiteSeries::polynomial_part(double xi) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    sum += t.coefficient * std::pow(xi, t.power) * hermite_eval(t.degree, xi);
  }
  return sum;
}

double GaussHermiteSeries::operator()(double xi) const {
  return polynomial_part(xi) * std::exp(-0.5 * xi * xi);
}

GaussHermiteSeries apply_ladder(const GaussHermiteSeries& f, LadderDirection direction,
                                const OscillatorParams& params) {
  if (!params.confining()) {
    throw Error(ErrorCode::domain_error, "ladder operators need omega > 0");
  }
  const double scale = params.xi_scale();
  const double derivative_weight =
      std::sqrt(params.hbar / (2.0 * params.mass * params.omega)) * scale;
  const double position_weight =
      std::sqrt(params.mass * params.omega / (2.0 * params.hbar)) / scale;
  const double sign = direction == LadderDirection::lower ? 1.0 : -1.0;
  return f.d_dxi().scaled(sign * derivative_weight) + f.times_xi().scaled(position_weight);
}

SeparableWave SeparableWave::eigenstate(const StateLabel& state,
                                        const OscillatorParams& params, NormMode norm,
                                        int l_max) {
  SeparableWave w;
  for (int axis = 0; axis < 3; ++axis) {
    w.factors[static_cast<std::size_t>(axis)] = GaussHermiteSeries::hermite_gaussian(
        state[axis], k_l(state[axis], params, norm, l_max));
  }
  w.energy = energy_of(state, params).value;
  w.params = params;
  return w;
}

SeparableWave SeparableWave::ladder(int axis, LadderDirection direction) const {
  if (axis < 0 || axis > 2) throw Error(ErrorCode::domain_error, "axis must be 0, 1 or 2");
  SeparableWave w = *this;
  auto& f = w.factors[static_cast<std::size_t>(axis)];
  f = apply_ladder(f, direction, params);
  return w;
}

cplx SeparableWave::operator()(const Vec3& x, double t) const {
  const double scale = params.xi_scale();
  double spatial = 1.0;
  for (std::size_t a = 0; a < 3; ++a) spatial *= factors[a](scale * x[a]);
  return spatial * time_phase(energy, t, params);
}

cplx ladder_apply_real(const StateLabel& state, int axis, LadderDirection direction,
                       const Vec3& x, double t, const OscillatorParams& params,
                       NormMode norm, int l_max) {
  return SeparableWave::eigenstate(state, params, norm, l_max).ladder(axis, direction)(x, t);
}

double ladder_apply_real_1d(int l, LadderDirection direction, double x,
                            const OscillatorParams& params, NormMode norm, int l_max) {
  const auto phi_l = GaussHermiteSeries::hermite_gaussian(l, k_l(l, params, norm, l_max));
  return apply_ladder(phi_l, direction, params)(xi_coordinate(x, params));
}

double lower_theta(int l, double z, const OscillatorParams& params, NormMode norm,
                   int l_max) {
  return std::numbers::sqrt2 / 2.0 * k_l(l, params, norm, l_max) *
         hermite_derivative(l, xi_coordinate(z, params), l_max);
}

cplx ladder_apply_conformal(const StateLabel& state, int axis, LadderDirection direction,
                            const Vec3& z, cplx s, const OscillatorParams& params,
                            NormMode norm, int l_max) {
  if (axis < 0 || axis > 2) throw Error(ErrorCode::domain_error, "axis must be 0, 1 or 2");
  if (!params.confining()) {
    throw Error(ErrorCode::domain_error, "ladder operators need omega > 0");
  }
  const double energy = energy_of(state, params).value;
  if (direction == LadderDirection::lower) {
    double product = 1.0;
    for (int a = 0; a < 3; ++a) {
      const double za = z[static_cast<std::size_t>(a)];
      product *= a == axis ? lower_theta(state[a], za, params, norm, l_max)
                           : theta(state[a], za, params, norm, l_max);
    }
    return product * tau(energy, s, params);
  }
  const RealCoordinates pre = inverse_map(z, s, energy, params);
  const Eigenfunction3D psi{state, params, norm, l_max};
  const DerivativeOperator d_dzeta_star{DerivativeKind::d_dzeta_star, axis,
                                        OperatorForm::energy_substituted, energy, params};
  return -(std::numbers::sqrt2 / 2.0) * apply_derivative(d_dzeta_star, make_field(psi), pre.x, pre.t);
}

CheckReport number_operator_check(const StateLabel& state, const OscillatorParams& params,
                                  std::span<const Vec3> grid, double tolerance,
                                  NormMode norm) {
  const std::string anchor = "(sum_i a_i^dagger a_i + 3/2) psi = (E / hbar omega) psi";
  const std::string name = "number-operator" + state.to_string();
  if (!params.confining()) return CheckReport::skip(name, anchor, "requires omega > 0");

  const auto psi = SeparableWave::eigenstate(state, params, norm);
  std::array<SeparableWave, 3> number_terms;
  for (int axis = 0; axis < 3; ++axis) {
    number_terms[static_cast<std::size_t>(axis)] =
        psi.ladder(axis, LadderDirection::lower).ladder(axis, LadderDirection::raise);
  }
  const double expected_eigenvalue = energy_of(state, params).value / (params.omega * params.hbar);
  constexpr double t = 0.25;
  double max_diff = 0.0;
  double scale = 0.0;
  cplx projection{};
  double norm2 = 0.0;
  for (const auto& x : grid) {
    const cplx value = psi(x, t);
    cplx lhs = 1.5 * value;
    for (const auto& term : number_terms) lhs += term(x, t);
    const cplx rhs = expected_eigenvalue * value;
    max_diff = std::max(max_diff, std::abs(lhs - rhs));
    scale = std::max(scale, std::abs(rhs));
    projection += std::conj(value) * lhs;
    norm2 += std::norm(value);
  }
  const double deviation = scale > 0.0 ? max_diff / scale : max_diff;
  auto report = CheckReport::make(name, anchor, deviation, tolerance);
  report.detail("expected_eigenvalue", expected_eigenvalue)
      .detail("measured_eigenvalue", norm2 > 0.0 ? (projection / norm2).real() : 0.0)
      .detail("grid_points", static_cast<std::int64_t>(grid.size()));
  return report;
}

CheckReport commutator_check(const StateLabel& state, const OscillatorParams& params,
                             std::span<const RealCoordinates> points, double tolerance) {
  const std::string anchor = "[a_i, a_j^dagger] psi = delta_ij psi";
  const std::string name = "commutator" + state.to_string();
  if (!params.confining()) return CheckReport::skip(name, anchor, "requires omega > 0");
  const auto psi = SeparableWave::eigenstate(state, params);
  double max_diff = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto forward = psi.ladder(j, LadderDirection::raise).ladder(i, LadderDirection::lower);
      const auto backward = psi.ladder(i, LadderDirection::lower).ladder(j, LadderDirection::raise);
      for (const auto& p : points) {
        const cplx value = psi(p.x, p.t);
        const cplx commutator = forward(p.x, p.t) - backward(p.x, p.t);
        max_diff = std::max(max_diff, std::abs(commutator - (i == j ? value : 0.0)));
        scale = std::max(scale, std::abs(value));
      }
    }
  }
  const double deviation = scale > 0.0 ? max_diff / scale : max_diff;
  auto report = CheckReport::make(name, anchor, deviation, tolerance);
  report.detail("points", static_cast<std::int64_t>(points.size()));
  return report;
}

CheckReport representation_agreement_check(const StateLabel& state,
                                           const OscillatorParams& params,
                                           std::span<const RealCoordinates> points,
                                           double tolerance) {
  const std::string anchor =
      "a_i = 2^{-1/2} d/dzeta_i, a_i^dagger = -2^{-1/2} d/dzeta_i* at (z, s) = map(x, t)";
  const std::string name = "ladder-representations" + state.to_string();
  if (!params.confining()) return CheckReport::skip(name, anchor, "requires omega > 0");
  const double energy = energy_of(state, params).value;
  double max_diff = 0.0;
  double scale = 0.0;
  for (const auto& p : points) {
    const ConformalPoint mapped = forward_map(p.x, p.t, energy, params);
    for (int axis = 0; axis < 3; ++axis) {
      for (auto direction : {LadderDirection::lower, LadderDirection::raise}) {
        const cplx real = ladder_apply_real(state, axis, direction, p.x, p.t, params);
        const cplx conformal =
            ladder_apply_conformal(state, axis, direction, mapped.z, mapped.s, params);
        max_diff = std::max(max_diff, std::abs(real - conformal));
        scale = std::max(scale, std::abs(real));
      }
    }
    scale = std::max(scale, std::abs(psi_real(state, p.x, p.t, params)));
  }
  const double deviation = scale > 0.0 ? max_diff / scale : max_diff;
  auto report = CheckReport::make(name, anchor, deviation, tolerance);
  report.detail("points", static_cast<std::int64_t>(points.size()));
  return report;
}

CheckReport adjointness_check(int max_level, const OscillatorParams& params,
                              int quadrature_order, double tolerance) {
  const std::string anchor = "<a^dagger phi_l, phi_m> = <phi_l, a phi_m>";
  if (!params.confining()) return CheckReport::skip("ladder-adjointness", anchor, "requires omega > 0");
  const auto& rule =
      numerics::cached_rule(numerics::QuadratureFamily::gauss_hermite, quadrature_order);
  const double dx = 1.0 / params.xi_scale();
  double worst = 0.0;
  for (int l = 0; l <= max_level; ++l) {
    const auto phi_l = GaussHermiteSeries::hermite_gaussian(l, k_l(l, params));
    const auto raised = apply_ladder(phi_l, LadderDirection::raise, params);
    for (int m = 0; m <= max_level; ++m) {
      const auto phi_m = GaussHermiteSeries::hermite_gaussian(m, k_l(m, params));
      const auto lowered = apply_ladder(phi_m, LadderDirection::lower, params);
      // Both integrands carry exp(-xi^2), which the rule's weight absorbs.
      const double lhs = rule.integrate([&](double xi) {
        return raised.polynomial_part(xi) * phi_m.polynomial_part(xi);
      }) * dx;
      const double rhs = rule.integrate([&](double xi) {
        return phi_l.polynomial_part(xi) * lowered.polynomial_part(xi);
      }) * dx;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  auto report = CheckReport::make("ladder-adjointness", anchor, worst, tolerance);
  report.detail("max_level", static_cast<std::int64_t>(max_level))
      .detail("quadrature_order", static_cast<std::int64_t>(quadrature_order));
  return report;
}

}  // namespace qho
