#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "qho/eigenfunctions.hpp"
#include "qho/numerics.hpp"
#include "qho/params.hpp"
#include "qho/report.hpp"

namespace qho {

/// One event seen from both coordinate systems: z = x,
/// s = t - i (m omega / 2E) |x|^2 (or its conjugate).
struct ConformalPoint {
  Vec3 x{};
  double t = 0.0;
  Vec3 z{};
  cplx s{};
  double energy = 0.0;
  OscillatorParams params;
};

struct RealCoordinates {
  Vec3 x{};
  double t = 0.0;
};

inline constexpr double kOffManifoldTolerance = 1e-12;

/// m omega / (2E). Throws Error(zero_energy) when E == 0.
double imaginary_time_rate(double energy, const OscillatorParams& params);

ConformalPoint forward_map(const Vec3& x, double t, double energy,
                           const OscillatorParams& params);
/// z* = x, s* = t + i (m omega / 2E) |x|^2.
ConformalPoint conjugate_map(const Vec3& x, double t, double energy,
                             const OscillatorParams& params);

/// x = z, t = s + i (m omega / 2E) |z|^2. Throws Error(off_manifold) when the
/// reconstructed t has |Im t| > tolerance.
RealCoordinates inverse_map(const Vec3& z, cplx s, double energy,
                            const OscillatorParams& params,
                            double tolerance = kOffManifoldTolerance);
/// x = z*, t = s* - i (m omega / 2E) |z|^2.
RealCoordinates inverse_conjugate_map(const Vec3& z_star, cplx s_star, double energy,
                                      const OscillatorParams& params,
                                      double tolerance = kOffManifoldTolerance);

/// Region of (x, t) on which a field may be sampled.
struct Box {
  Vec3 lo{};
  Vec3 hi{};
  double t_lo = 0.0;
  double t_hi = 0.0;
};

/// A complex field over (x, t). Missing analytic derivatives are replaced by
/// finite differences; a domain restricts where stencils may reach.
struct Field {
  std::function<cplx(const Vec3&, double)> value;
  std::function<cplx(const Vec3&, double, int)> d_dx;
  std::function<cplx(const Vec3&, double)> d_dt;
  std::optional<Box> domain;

  cplx operator()(const Vec3& x, double t) const { return value(x, t); }
};

/// Field of an eigenfunction with exact x and t derivatives.
Field make_field(const Eigenfunction3D& psi);
/// Same values, derivatives left to finite differences.
Field make_numeric_field(std::function<cplx(const Vec3&, double)> value,
                         std::optional<Box> domain = std::nullopt);

enum class DerivativeKind { d_ds, d_ds_star, d_dz, d_dz_star, d_dzeta, d_dzeta_star };

std::string_view to_string(DerivativeKind kind);

/// chain_rule:  d/dz_i = d/dx_i + i (m omega x_i / E) d/dt, needs E.
/// energy_substituted: i hbar d/dt replaced by E, leaving
///   d/dz_i = d/dx_i + (m omega / hbar) x_i.
enum class OperatorForm { chain_rule, energy_substituted };

struct DerivativeOperator {
  DerivativeKind kind = DerivativeKind::d_dz;
  int axis = 0;
  OperatorForm form = OperatorForm::energy_substituted;
  double energy = 0.0;  // only read by the chain_rule form of spatial kinds
  OscillatorParams params;
  /// Step in xi units (space) or hbar/E units (time).
  numerics::StencilSpec stencil{1e-3, 1, 1};
};

cplx apply_derivative(const DerivativeOperator& op, const Field& f, const Vec3& x, double t);

/// The field op f, with derivatives left to finite differences.
Field apply_to_field(const DerivativeOperator& op, Field f);

/// Physical finite-difference steps that correspond to the stencil's step.
double spatial_step(const DerivativeOperator& op);
double time_step(const DerivativeOperator& op);

/// -(hbar^2 / 2m) sum_i d/dz_i* d/dz_i u + (3/2) hbar omega u, with every
/// derivative taken numerically. Never evaluates the oscillator potential.
cplx conformal_hamiltonian(const Field& u, const Vec3& x, double t,
                           const OscillatorParams& params,
                           const numerics::StencilSpec& stencil = {1e-3, 1, 1});

/// -(hbar^2 / 2m) laplacian u + V(x) u, laplacian by central differences.
cplx real_hamiltonian(const Field& u, const Vec3& x, double t,
                      const OscillatorParams& params,
                      const numerics::StencilSpec& stencil = {1e-3, 1, 2});

/// Evaluates dz_v/ds, ds/dz_u, dz*_v/ds*, ds*/dz*_u for every axis pair at
/// each sample point using the chain-rule operators on the coordinate
/// functions written in (x, t). All must vanish.
CheckReport coordinate_independence_check(const OscillatorParams& params, double energy,
                                          std::span<const RealCoordinates> points,
                                          double tolerance = 1e-10);

/// Rectangle in (t, u) with u = |x|^2 >= 0; y = -(m omega / 2E) u.
struct CrGrid {
  double t_lo = 0.0;
  double t_hi = 6.0;
  double u_lo = 0.5;
  double u_hi = 4.0;
  int points_t = 13;
  int points_u = 8;
  /// Coarse step in t and y; the fine level halves it.
  double step = 2e-2;
};

struct CrAnalysis {
  /// max over grid of max(|g_t - h_y|, |g_y + h_t|) at step and step/2.
  double standard_coarse = 0.0;
  double standard_fine = 0.0;
  double standard_min_fine = 0.0;
  double standard_order = 0.0;
  /// Same with the pairing g_y = h_t, h_y = -g_t.
  double swapped_fine = 0.0;
  /// max |tau_tt + (4E^2/(m omega)^2) tau_uu| at step and step/2.
  double second_order_coarse = 0.0;
  double second_order_fine = 0.0;
  double second_order_order = 0.0;
};

using ComplexTimeFunction = std::function<cplx(cplx)>;

CrAnalysis cr_analyze(const ComplexTimeFunction& tau_fn, double energy,
                      const OscillatorParams& params, const CrGrid& grid = {});

/// A priori bound on the standard residual of tau(s) = exp(-iEs/hbar) at the
/// fine step: each central difference is off by about (kh)^2/6 k |tau| with
/// k = E/hbar; this returns (kh)^2 k max|tau|, three times the leading term
/// of their sum.
double cr_truncation_envelope(double energy, const OscillatorParams& params,
                              const CrGrid& grid = {});

/// Report keyed on the standard Cauchy-Riemann residual at the fine step.
/// Without an explicit tolerance the truncation envelope is used.
CheckReport cr_residual(const ComplexTimeFunction& tau_fn, double energy,
                        const OscillatorParams& params, const CrGrid& grid = {},
                        std::optional<double> tolerance = std::nullopt);

}  // namespace qho
