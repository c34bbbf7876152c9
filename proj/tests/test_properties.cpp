// Randomized property checks. Every case draws from a fixed seed so failures
// reproduce; the case index is printed on failure.
#include <gtest/gtest.h>

#include <cmath>

#include "qho/bargmann.hpp"
#include "qho/conformal.hpp"
#include "qho/exact.hpp"
#include "qho/hermite.hpp"
#include "qho/ladder.hpp"
#include "qho/numerics.hpp"
#include "qho/suite.hpp"

namespace qho {
namespace {

constexpr int kCases = 200;

struct Gen {
  SampleRng rng;
  explicit Gen(std::uint64_t stream) : rng(0xC0FFEE, stream) {}
  double real(double lo, double hi) { return rng.uniform(lo, hi); }
  int integer(int lo, int hi) {
    return std::min(hi, lo + static_cast<int>(rng.uniform(0.0, hi - lo + 1.0)));
  }
  OscillatorParams params() { return {real(0.3, 3.0), real(0.3, 3.0), real(0.3, 3.0)}; }
  StateLabel state(int n_max) {
    const int a = integer(0, n_max);
    const int b = integer(0, n_max - a);
    return StateLabel(a, b, integer(0, n_max - a - b));
  }
  Vec3 point(double extent) {
    return {real(-extent, extent), real(-extent, extent), real(-extent, extent)};
  }
};

TEST(Property, HermiteSatisfiesItsDifferentialEquation) {
  Gen g(1);
  for (int i = 0; i < kCases; ++i) {
    const int l = g.integer(0, 20);
    const double x = g.real(-3.0, 3.0);
    const double residual = hermite_second_derivative(l, x) - 2.0 * x * hermite_derivative(l, x) +
                            2.0 * l * hermite_eval(l, x);
    const double scale = std::abs(hermite_second_derivative(l, x)) +
                         std::abs(2.0 * x * hermite_derivative(l, x)) +
                         std::abs(2.0 * l * hermite_eval(l, x)) + 1.0;
    EXPECT_LT(std::abs(residual), 1e-13 * scale) << "case " << i;
  }
}

TEST(Property, HermiteMatchesExactPolynomial) {
  Gen g(2);
  for (int i = 0; i < kCases; ++i) {
    const int l = g.integer(0, 30);
    const double x = g.real(-2.0, 2.0);
    const HermitePoly p = hermite_poly(l);
    double scale = 0.0;
    for (const auto& [k, c] : p.coefficients.terms()) {
      scale += std::abs(c.convert_to<double>() * std::pow(x, k));
    }
    EXPECT_LT(std::abs(hermite_eval(l, x) - p.evaluate(x)), 1e-13 * scale) << "case " << i;
  }
}

TEST(Property, ConformalRoundTripAnyParameters) {
  Gen g(3);
  for (int i = 0; i < kCases; ++i) {
    const OscillatorParams p = g.params();
    const double e = g.real(0.1, 10.0);
    const Vec3 x = g.point(4.0);
    const double t = g.real(-20.0, 20.0);
    const ConformalPoint m = forward_map(x, t, e, p);
    const RealCoordinates r = inverse_map(m.z, m.s, e, p);
    EXPECT_EQ(r.x, x) << "case " << i;
    EXPECT_EQ(r.t, t) << "case " << i;
    const ConformalPoint c = conjugate_map(x, t, e, p);
    EXPECT_EQ(c.s, std::conj(m.s)) << "case " << i;
  }
}

TEST(Property, ConformalEigenfunctionEqualsReal) {
  Gen g(4);
  for (int i = 0; i < kCases; ++i) {
    const OscillatorParams p = g.params();
    const StateLabel s = g.state(5);
    const Vec3 x = g.point(2.0 / p.xi_scale());
    const double t = g.real(-3.0, 3.0);
    const ConformalPoint m = forward_map(x, t, energy_of(s, p).value, p);
    const cplx real = psi_real(s, x, t, p);
    EXPECT_LT(std::abs(psi_conformal(s, m.z, m.s, p) - real), 1e-13 * (std::abs(real) + 1e-3))
        << "case " << i;
  }
}

TEST(Property, RaiseAfterLowerCountsQuanta) {
  Gen g(5);
  for (int i = 0; i < kCases; ++i) {
    const OscillatorParams p = g.params();
    const StateLabel s = g.state(6);
    const int axis = g.integer(0, 2);
    const Vec3 x = g.point(1.5 / p.xi_scale());
    const double t = g.real(-1.0, 1.0);
    const SeparableWave w = SeparableWave::eigenstate(s, p);
    const cplx number = w.ladder(axis, LadderDirection::lower)
                            .ladder(axis, LadderDirection::raise)(x, t);
    const cplx expected = static_cast<double>(s[axis]) * w(x, t);
    EXPECT_LT(std::abs(number - expected), 1e-11 * (std::abs(expected) + std::abs(w(x, t)) + 1e-6))
        << "case " << i;
  }
}

TEST(Property, SegalBargmannClosedFormAtRandomPoints) {
  Gen g(6);
  for (int i = 0; i < 60; ++i) {
    const int l = g.integer(0, 8);
    const double a = g.real(-2.0, 2.0);
    const auto sign = g.integer(0, 1) ? KernelSign::plus : KernelSign::minus;
    EXPECT_NEAR(sb_transform(l, a, sign), sb_closed_form(l, a, sign), 1e-8) << "case " << i;
  }
}

TEST(Property, SegalBargmannIsLinearInTheState) {
  // Transform of phi_1 + 2 phi_3 equals the same combination of closed forms.
  Gen g(7);
  for (int i = 0; i < 40; ++i) {
    const double a = g.real(-1.5, 1.5);
    const double combined = sb_transform(1, a) + 2.0 * sb_transform(3, a);
    EXPECT_NEAR(combined, sb_closed_form(1, a) + 2.0 * sb_closed_form(3, a), 2e-8) << "case " << i;
  }
}

TEST(Property, ConjugateTransformAtRandomB) {
  Gen g(8);
  for (int i = 0; i < 60; ++i) {
    const int l = g.integer(0, 8);
    const double b = g.real(0.5, 4.0);
    const double value = conjugate_transform(l, b);
    EXPECT_NEAR(value / conjugate_closed_form(l, b), 1.0, 1e-8) << "case " << i;
  }
}

TEST(Property, RichardsonExactOnPolynomials) {
  // Level k removes error terms through h^{2k}, so polynomials up to
  // degree 2k + 2 are differentiated exactly (up to rounding).
  Gen g(9);
  for (int i = 0; i < kCases; ++i) {
    const int levels = g.integer(0, 2);
    const int degree = 2 * levels + 2;
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = g.real(-1.0, 1.0);
    auto poly = [&c](double x) {
      double s = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
      return s;
    };
    double exact = 0.0;
    const double x = g.real(-1.0, 1.0);
    for (std::size_t k = 1; k < c.size(); ++k) exact += k * c[k] * std::pow(x, k - 1);
    const auto d = numerics::differentiate(poly, x, {0.1, levels, 1});
    EXPECT_NEAR(d.value, exact, 1e-11) << "case " << i;
  }
}

TEST(Property, SurdProductsCommuteAndAssociate) {
  Gen g(10);
  for (int i = 0; i < kCases; ++i) {
    auto random_surd = [&g] {
      const exact::Rational q(g.integer(1, 50), g.integer(1, 50));
      const exact::Surd s = exact::Surd::sqrt_of(q);
      return g.integer(0, 1) ? s : -s;
    };
    const auto a = random_surd(), b = random_surd(), c = random_surd();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_NEAR((a * b).to_double(), a.to_double() * b.to_double(), 1e-12 * (1 + std::abs(a.to_double() * b.to_double())));
  }
}

TEST(Property, CoordinateIndependenceAnyParameters) {
  Gen g(11);
  for (int i = 0; i < 20; ++i) {
    const OscillatorParams p = g.params();
    std::vector<RealCoordinates> points;
    for (int k = 0; k < 5; ++k) points.push_back({g.point(2.0), g.real(-3.0, 3.0)});
    const CheckReport r = coordinate_independence_check(p, g.real(0.5, 5.0), points);
    EXPECT_TRUE(r.passed) << "case " << i << " measured " << r.measured;
  }
}

}  // namespace
}  // namespace qho
