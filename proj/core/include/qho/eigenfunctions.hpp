#pragma once

#include <optional>
#include <string_view>

#include "qho/hermite.hpp"
#include "qho/params.hpp"

namespace qho {

/// unit_norm: k_l = (m omega / (pi hbar))^{1/4} (2^l l!)^{-1/2}, so that
/// the integral of |phi_l|^2 is 1.
/// paper_norm: k_l = (2 m omega / hbar)^{1/4} (2^l l!)^{-1/2}; larger by
/// the constant factor (2 pi)^{1/4} for every l.
enum class NormMode { unit_norm, paper_norm };

std::string_view to_string(NormMode mode);
std::optional<NormMode> parse_norm_mode(std::string_view text);

double k_l(int l, const OscillatorParams& params, NormMode mode = NormMode::unit_norm,
           int l_max = kDefaultHermiteLMax);

/// exp(-i E t / hbar)
cplx time_phase(double energy, double t, const OscillatorParams& params);

/// exp(-i E s / hbar) for complex time s.
cplx tau(double energy, cplx s, const OscillatorParams& params);

/// phi_l(x) = k_l H_l(xi) exp(-xi^2 / 2) with analytic x-derivatives.
struct Eigenfunction1D {
  int l = 0;
  OscillatorParams params;
  NormMode norm = NormMode::unit_norm;
  int l_max = kDefaultHermiteLMax;

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;
};

/// psi(x, t) = phi_l1(x1) phi_l2(x2) phi_l3(x3) exp(-i E t / hbar).
struct Eigenfunction3D {
  StateLabel state;
  OscillatorParams params;
  NormMode norm = NormMode::unit_norm;
  int l_max = kDefaultHermiteLMax;

  Eigenfunction1D factor(int axis) const { return {state[axis], params, norm, l_max}; }
  Energy energy() const { return energy_of(state, params); }

  cplx operator()(const Vec3& x, double t) const;
  cplx d_dx(const Vec3& x, double t, int axis) const;
  cplx d_dt(const Vec3& x, double t) const;
  /// Analytic Laplacian in x.
  cplx laplacian(const Vec3& x, double t) const;
};

/// theta_l1(z1) theta_l2(z2) theta_l3(z3) tau(s); theta_l(z) = k_l H_l(zeta),
/// which carries no Gaussian factor.
struct ConformalEigenfunction {
  StateLabel state;
  OscillatorParams params;
  NormMode norm = NormMode::unit_norm;
  int l_max = kDefaultHermiteLMax;

  Energy energy() const { return energy_of(state, params); }

  double theta(const Vec3& z) const;
  cplx operator()(const Vec3& z, cplx s) const;
};

double phi(int l, double x, const OscillatorParams& params,
           NormMode mode = NormMode::unit_norm, int l_max = kDefaultHermiteLMax);

double theta(int l, double z, const OscillatorParams& params,
             NormMode mode = NormMode::unit_norm, int l_max = kDefaultHermiteLMax);

cplx psi_real(const StateLabel& state, const Vec3& x, double t,
              const OscillatorParams& params, NormMode mode = NormMode::unit_norm,
              int l_max = kDefaultHermiteLMax);

cplx psi_conformal(const StateLabel& state, const Vec3& z, cplx s,
                   const OscillatorParams& params, NormMode mode = NormMode::unit_norm,
                   int l_max = kDefaultHermiteLMax);

}  // namespace qho
