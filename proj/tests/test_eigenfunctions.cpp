#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qho/eigenfunctions.hpp"
#include "qho/hermite.hpp"
#include "qho/numerics.hpp"

namespace qho {
namespace {

const OscillatorParams kNatural = OscillatorParams::natural();
const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

TEST(NormConstant, Examples) {
  EXPECT_NEAR(k_l(0, kNatural, NormMode::paper_norm), std::pow(2.0, 0.25), 1e-15);
  EXPECT_NEAR(k_l(0, kNatural, NormMode::unit_norm), kPiQuarter, 1e-15);
  EXPECT_NEAR(k_l(2, kNatural, NormMode::unit_norm), kPiQuarter / std::sqrt(8.0), 1e-15);
}

TEST(NormConstant, UnitNormFromQuadrature) {
  // Independent oracle: 1 / sqrt(int H_l^2 e^{-xi^2} dxi) by quadrature.
  const auto& rule = numerics::cached_rule(numerics::QuadratureFamily::gauss_hermite, 64);
  for (int l = 0; l <= 12; ++l) {
    const double norm2 = rule.integrate([l](double x) { return std::pow(hermite_eval(l, x), 2); });
    EXPECT_NEAR(k_l(l, kNatural), 1.0 / std::sqrt(norm2), 1e-13 * k_l(l, kNatural));
  }
}

TEST(NormConstant, ScalesWithParameters) {
  const OscillatorParams p{1.0, 2.0, 8.0};  // m omega / hbar = 16
  EXPECT_NEAR(k_l(0, p), std::pow(16.0 / std::numbers::pi, 0.25), 1e-14);
  // unit norm over physical x: int phi_0^2 dx = 1
  const auto& rule = numerics::cached_rule(numerics::QuadratureFamily::gauss_hermite, 40);
  EXPECT_NEAR(k_l(0, p) * k_l(0, p) / p.xi_scale() * rule.integrate([](double) { return 1.0; }),
              1.0, 1e-14);
}

TEST(NormMode, Parse) {
  EXPECT_EQ(parse_norm_mode("unit_norm"), NormMode::unit_norm);
  EXPECT_EQ(parse_norm_mode("paper"), NormMode::paper_norm);
  EXPECT_FALSE(parse_norm_mode("bogus").has_value());
  EXPECT_EQ(to_string(NormMode::paper_norm), "paper_norm");
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(1, 0.0, kNatural), 0.0);
  EXPECT_NEAR(phi(0, 0.0, kNatural), kPiQuarter, 1e-15);
  EXPECT_LT(std::abs(phi(2, 10.0, kNatural)), 1e-12);
  EXPECT_LT(std::abs(phi(2, -10.0, kNatural)), 1e-12);
}

TEST(Phi, AnalyticDerivativesMatchDifferences) {
  for (int l = 0; l <= 8; ++l) {
    const Eigenfunction1D f{l, OscillatorParams{1.3, 0.7, 2.1}};
    auto value = [&f](double x) { return f(x); };
    for (double x : {-1.2, 0.0, 0.45, 2.0}) {
      EXPECT_NEAR(f.derivative(x), numerics::differentiate(value, x, {1e-3, 2, 1}).value, 1e-9);
      EXPECT_NEAR(f.second_derivative(x), numerics::differentiate(value, x, {1e-3, 1, 2}).value,
                  1e-7);
    }
  }
}

TEST(Psi, Examples) {
  EXPECT_NEAR(std::abs(psi_real(StateLabel(0, 0, 0), {0, 0, 0}, 0.0, kNatural) -
                       std::pow(std::numbers::pi, -0.75)),
              0.0, 1e-15);
  EXPECT_EQ(std::abs(psi_real(StateLabel(1, 0, 0), {0.0, 1.0, 1.0}, 3.7, kNatural)), 0.0);
  const StateLabel s(2, 1, 0);
  const Vec3 x{0.3, -0.8, 1.1};
  const double period = 2.0 * std::numbers::pi / energy_of(s, kNatural).value;
  EXPECT_NEAR(std::abs(psi_real(s, x, period, kNatural) - psi_real(s, x, 0.0, kNatural)), 0.0,
              1e-14);
}

TEST(Psi, TimeDerivativeIsEnergy) {
  const Eigenfunction3D psi{StateLabel(1, 1, 2), OscillatorParams{0.9, 1.1, 1.7}};
  const Vec3 x{0.2, -0.4, 0.6};
  const cplx lhs = cplx(0.0, psi.params.hbar) * psi.d_dt(x, 0.8);
  EXPECT_LT(std::abs(lhs - psi.energy().value * psi(x, 0.8)), 1e-14);
}

TEST(Psi, LaplacianMatchesSumOfSecondDerivatives) {
  const Eigenfunction3D psi{StateLabel(2, 0, 1), kNatural};
  const Vec3 x{0.3, 0.7, -0.5};
  cplx sum{};
  for (int a = 0; a < 3; ++a) {
    double product = 1.0;
    for (int b = 0; b < 3; ++b) {
      const auto f = psi.factor(b);
      product *= a == b ? f.second_derivative(x[static_cast<std::size_t>(b)])
                        : f(x[static_cast<std::size_t>(b)]);
    }
    sum += product;
  }
  sum *= time_phase(psi.energy().value, 0.4, kNatural);
  EXPECT_LT(std::abs(psi.laplacian(x, 0.4) - sum), 1e-15);
}

TEST(Conformal, GroundStateAtOrigin) {
  const double k0 = k_l(0, kNatural);
  EXPECT_NEAR(std::abs(psi_conformal(StateLabel(0, 0, 0), {0, 0, 0}, cplx{}, kNatural)),
              k0 * k0 * k0, 1e-15);
}

TEST(Conformal, ThetaHasNoGaussian) {
  // theta_2 = k_2 (4 zeta^2 - 2) exactly, even far out.
  for (double z : {10.0, 100.0, 1e4}) {
    EXPECT_NEAR(theta(2, z, kNatural) / (k_l(2, kNatural) * (4 * z * z - 2)), 1.0, 1e-14);
  }
}

TEST(Conformal, TauIsExponentialOfComplexTime) {
  const cplx s(0.5, -0.25);
  EXPECT_LT(std::abs(tau(2.0, s, kNatural) - std::exp(cplx(0, -2.0) * s)), 1e-15);
  EXPECT_LT(std::abs(time_phase(2.0, 0.5, kNatural) - tau(2.0, 0.5, kNatural)), 1e-16);
}

}  // namespace
}  // namespace qho
