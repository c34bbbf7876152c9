#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qho/conformal.hpp"
#include "qho/eigenfunctions.hpp"
#include "qho/params.hpp"
#include "qho/report.hpp"

namespace qho {

enum class LadderDirection { lower, raise };
enum class LadderRepresentation { real_x, conformal_zeta, bargmann_a, conjugate_b, state_label };

std::string_view to_string(LadderDirection direction);
std::string_view to_string(LadderRepresentation rep);

struct LadderRep {
  LadderRepresentation rep = LadderRepresentation::real_x;
  LadderDirection direction = LadderDirection::lower;
  int axis = 0;
};

/// Action of a ladder operator on a state label. The coefficient is kept as
/// its exact integer square.
struct LadderResult {
  std::int64_t coefficient_squared = 0;
  std::optional<StateLabel> state;  // empty when the vacuum was annihilated

  double coefficient() const;
  bool annihilated() const { return !state.has_value(); }
};

/// lower: sqrt(l_axis) |.., l_axis - 1, ..>; raise: sqrt(l_axis + 1) |.., l_axis + 1, ..>.
LadderResult ladder_state(const StateLabel& state, int axis, LadderDirection direction);

/// One term c xi^p H_l(xi) exp(-xi^2 / 2).
struct GaussHermiteTerm {
  double coefficient = 0.0;
  int power = 0;
  int degree = 0;
};

/// Finite sum of GaussHermiteTerm. Closed under d/dxi and multiplication
/// by xi; d/dxi uses H_l' = 2l H_{l-1}, so ladder operators can be composed
/// without any finite differencing.
class GaussHermiteSeries {
 public:
  GaussHermiteSeries() = default;
  static GaussHermiteSeries hermite_gaussian(int degree, double coefficient);

  const std::vector<GaussHermiteTerm>& terms() const { return terms_; }

  GaussHermiteSeries d_dxi() const;
  GaussHermiteSeries times_xi() const;
  GaussHermiteSeries scaled(double factor) const;
  friend GaussHermiteSeries operator+(const GaussHermiteSeries& a, const GaussHermiteSeries& b);

  double operator()(double xi) const;
  /// Value with the exp(-xi^2/2) factor removed.
  double polynomial_part(double xi) const;

 private:
  void add(const GaussHermiteTerm& term);
  std::vector<GaussHermiteTerm> terms_;
};

/// Ladder operator in real coordinates acting on a 1D function of x, with
/// d/dx = xi_scale d/dxi:
///   lower = sqrt(hbar / 2 m omega) d/dx + sqrt(m omega / 2 hbar) x
///   raise = -sqrt(hbar / 2 m omega) d/dx + sqrt(m omega / 2 hbar) x
GaussHermiteSeries apply_ladder(const GaussHermiteSeries& f, LadderDirection direction,
                                const OscillatorParams& params);

/// Product of three 1D series times exp(-i E t / hbar).
struct SeparableWave {
  std::array<GaussHermiteSeries, 3> factors;
  double energy = 0.0;
  OscillatorParams params;

  static SeparableWave eigenstate(const StateLabel& state, const OscillatorParams& params,
                                  NormMode norm = NormMode::unit_norm,
                                  int l_max = kDefaultHermiteLMax);

  SeparableWave ladder(int axis, LadderDirection direction) const;
  cplx operator()(const Vec3& x, double t) const;
};

cplx ladder_apply_real(const StateLabel& state, int axis, LadderDirection direction,
                       const Vec3& x, double t, const OscillatorParams& params,
                       NormMode norm = NormMode::unit_norm, int l_max = kDefaultHermiteLMax);

/// 1D form (no time phase): the ladder operator applied to phi_l at x.
double ladder_apply_real_1d(int l, LadderDirection direction, double x,
                            const OscillatorParams& params,
                            NormMode norm = NormMode::unit_norm,
                            int l_max = kDefaultHermiteLMax);

/// 2^{-1/2} d/dzeta theta_l(zeta): acts on the polynomial part only.
double lower_theta(int l, double z, const OscillatorParams& params,
                   NormMode norm = NormMode::unit_norm, int l_max = kDefaultHermiteLMax);

/// Ladder operators in the conformal representation at the point (z, s).
/// Lowering is 2^{-1/2} d/dzeta on the theta factor, times the remaining
/// thetas and tau(s). Raising is -2^{-1/2} d/dzeta*, which is evaluated in
/// the energy-substituted real-coordinate form at the preimage of (z, s);
/// (z, s) must therefore lie on the image of the forward map for the
/// state's energy (Error(off_manifold) otherwise).
cplx ladder_apply_conformal(const StateLabel& state, int axis, LadderDirection direction,
                            const Vec3& z, cplx s, const OscillatorParams& params,
                            NormMode norm = NormMode::unit_norm,
                            int l_max = kDefaultHermiteLMax);

/// (sum_i a_i^dagger a_i + 3/2) psi against (E / hbar omega) psi on the grid.
/// Deviation is relative to max |(E / hbar omega) psi| over the grid.
CheckReport number_operator_check(const StateLabel& state, const OscillatorParams& params,
                                  std::span<const Vec3> grid, double tolerance = 1e-10,
                                  NormMode norm = NormMode::unit_norm);

/// [a_i, a_j^dagger] psi = delta_ij psi for all axis pairs.
CheckReport commutator_check(const StateLabel& state, const OscillatorParams& params,
                             std::span<const RealCoordinates> points,
                             double tolerance = 1e-10);

/// Real-coordinate and conformal ladder results agree at mapped points.
CheckReport representation_agreement_check(const StateLabel& state,
                                           const OscillatorParams& params,
                                           std::span<const RealCoordinates> points,
                                           double tolerance = 1e-10);

/// <a^dagger phi_l, phi_m> = <phi_l, a phi_m> for l, m <= max_level by
/// Gauss-Hermite quadrature.
CheckReport adjointness_check(int max_level, const OscillatorParams& params,
                              int quadrature_order = 64, double tolerance = 1e-9);

}  // namespace qho
