#include "qho/eigenfunctions.hpp"

#include <cmath>
#include <numbers>

#include "qho/error.hpp"

namespace qho {

using namespace std::complex_literals;

std::string_view to_string(NormMode mode) {
  return mode == NormMode::unit_norm ? "unit_norm" : "paper_norm";
}

std::optional<NormMode> parse_norm_mode(std::string_view text) {
  if (text == "unit_norm" || text == "unit") return NormMode::unit_norm;
  if (text == "paper_norm" || text == "paper") return NormMode::paper_norm;
  return std::nullopt;
}

double k_l(int l, const OscillatorParams& params, NormMode mode, int l_max) {
  if (l < 0) throw Error(ErrorCode::domain_error, "quantum number must be non-negative");
  if (l > l_max) {
    throw Error(ErrorCode::degree_too_large,
                "l = " + std::to_string(l) + " exceeds l_max " + std::to_string(l_max));
  }
  const double ratio = params.mass * params.omega / params.hbar;
  const double prefactor = mode == NormMode::unit_norm
                               ? std::pow(ratio / std::numbers::pi, 0.25)
                               : std::pow(2.0 * ratio, 0.25);
  // (2^l l!)^{-1/2} via lgamma keeps l up to l_max finite.
  const double log_norm = -0.5 * (l * std::numbers::ln2 + std::lgamma(l + 1.0));
  return prefactor * std::exp(log_norm);
}

cplx time_phase(double energy, double t, const OscillatorParams& params) {
  return std::exp(-1i * (energy * t / params.hbar));
}

cplx tau(double energy, cplx s, const OscillatorParams& params) {
  return std::exp(-1i * energy * s / params.hbar);
}

double Eigenfunction1D::operator()(double x) const {
  const double xi = xi_coordinate(x, params);
  return k_l(l, params, norm, l_max) * hermite_eval(l, xi, l_max) * std::exp(-0.5 * xi * xi);
}

double Eigenfunction1D::derivative(double x) const {
  // d/dx = xi_scale d/dxi;  d/dxi [H e^{-xi^2/2}] = (H' - xi H) e^{-xi^2/2}
  const double scale = params.xi_scale();
  const double xi = scale * x;
  const double h = hermite_eval(l, xi, l_max);
  const double dh = hermite_derivative(l, xi, l_max);
  return k_l(l, params, norm, l_max) * scale * (dh - xi * h) * std::exp(-0.5 * xi * xi);
}

double Eigenfunction1D::second_derivative(double x) const {
  // d^2/dxi^2 [H e^{-xi^2/2}] = (H'' - 2 xi H' + (xi^2 - 1) H) e^{-xi^2/2}
  const double scale = params.xi_scale();
  const double xi = scale * x;
  const double h = hermite_eval(l, xi, l_max);
  const double dh = hermite_derivative(l, xi, l_max);
  const double d2h = hermite_second_derivative(l, xi, l_max);
  return k_l(l, params, norm, l_max) * scale * scale *
         (d2h - 2.0 * xi * dh + (xi * xi - 1.0) * h) * std::exp(-0.5 * xi * xi);
}

cplx Eigenfunction3D::operator()(const Vec3& x, double t) const {
  double spatial = 1.0;
  for (int axis = 0; axis < 3; ++axis) spatial *= factor(axis)(x[static_cast<std::size_t>(axis)]);
  return spatial * time_phase(energy().value, t, params);
}

cplx Eigenfunction3D::d_dx(const Vec3& x, double t, int axis) const {
  double spatial = 1.0;
  for (int a = 0; a < 3; ++a) {
    const double xa = x[static_cast<std::size_t>(a)];
    spatial *= a == axis ? factor(a).derivative(xa) : factor(a)(xa);
  }
  return spatial * time_phase(energy().value, t, params);
}

cplx Eigenfunction3D::d_dt(const Vec3& x, double t) const {
  return -1i * (energy().value / params.hbar) * (*this)(x, t);
}

cplx Eigenfunction3D::laplacian(const Vec3& x, double t) const {
  double values[3];
  double second[3];
  for (int a = 0; a < 3; ++a) {
    const double xa = x[static_cast<std::size_t>(a)];
    values[a] = factor(a)(xa);
    second[a] = factor(a).second_derivative(xa);
  }
  const double sum = second[0] * values[1] * values[2] + values[0] * second[1] * values[2] +
                     values[0] * values[1] * second[2];
  return sum * time_phase(energy().value, t, params);
}

double ConformalEigenfunction::theta(const Vec3& z) const {
  double product = 1.0;
  for (int a = 0; a < 3; ++a) {
    product *= qho::theta(state[a], z[static_cast<std::size_t>(a)], params, norm, l_max);
  }
  return product;
}

cplx ConformalEigenfunction::operator()(const Vec3& z, cplx s) const {
  return theta(z) * tau(energy().value, s, params);
}

double phi(int l, double x, const OscillatorParams& params, NormMode mode, int l_max) {
  return Eigenfunction1D{l, params, mode, l_max}(x);
}

double theta(int l, double z, const OscillatorParams& params, NormMode mode, int l_max) {
  return k_l(l, params, mode, l_max) * hermite_eval(l, xi_coordinate(z, params), l_max);
}

cplx psi_real(const StateLabel& state, const Vec3& x, double t,
              const OscillatorParams& params, NormMode mode, int l_max) {
  return Eigenfunction3D{state, params, mode, l_max}(x, t);
}

cplx psi_conformal(const StateLabel& state, const Vec3& z, cplx s,
                   const OscillatorParams& params, NormMode mode, int l_max) {
  return ConformalEigenfunction{state, params, mode, l_max}(z, s);
}

}  // namespace qho
