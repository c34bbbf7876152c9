#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qho/error.hpp"
#include "qho/numerics.hpp"

namespace qho::numerics {
namespace {

TEST(Quadrature, SingleNodeHermite) {
  const QuadratureRule r = build_rule(QuadratureFamily::gauss_hermite, 1);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_EQ(r.nodes[0], 0.0);
  EXPECT_NEAR(r.weights[0], std::sqrt(std::numbers::pi), 1e-15);
}

TEST(Quadrature, GaussianSecondMoment) {
  const auto& r = cached_rule(QuadratureFamily::gauss_hermite, 20);
  EXPECT_NEAR(r.integrate([](double x) { return x * x; }), std::sqrt(std::numbers::pi) / 2,
              1e-13);
}

TEST(Quadrature, LaguerreCubicMoment) {
  const auto& r = cached_rule(QuadratureFamily::gauss_laguerre, 15);
  EXPECT_NEAR(r.integrate([](double a) { return a * a * a; }), 6.0, 1e-12);
}

TEST(Quadrature, MomentsUpToDegreeTwoNMinusOne) {
  for (int order : {2, 5, 16, 64, 128}) {
    const auto& h = cached_rule(QuadratureFamily::gauss_hermite, order);
    const auto& g = cached_rule(QuadratureFamily::gauss_laguerre, order);
    for (int d = 0; d <= std::min(2 * order - 1, 40); ++d) {
      const double gh_exact = d % 2 ? 0.0 : std::tgamma(0.5 * (d + 1));
      // Odd moments cancel between terms of size sum |w x^d|.
      const double magnitude =
          h.integrate([d](double x) { return std::abs(std::pow(x, d)); });
      EXPECT_NEAR(h.integrate([d](double x) { return std::pow(x, d); }), gh_exact,
                  1e-13 * magnitude)
          << "hermite order " << order << " degree " << d;
      if (d <= 20) {
        const double gl_exact = std::tgamma(d + 1.0);
        EXPECT_NEAR(g.integrate([d](double x) { return std::pow(x, d); }), gl_exact,
                    1e-11 * gl_exact)
            << "laguerre order " << order << " degree " << d;
      }
    }
  }
}

TEST(Quadrature, NodesAscendingAndSymmetric) {
  const auto& r = cached_rule(QuadratureFamily::gauss_hermite, 33);
  for (std::size_t i = 1; i < r.nodes.size(); ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    EXPECT_EQ(r.nodes[i], -r.nodes[r.nodes.size() - 1 - i]);
  }
  const auto& l = cached_rule(QuadratureFamily::gauss_laguerre, 33);
  EXPECT_GT(l.nodes.front(), 0.0);
}

TEST(Quadrature, OrderOutOfRange) {
  for (int bad : {0, -3, 257}) {
    try {
      build_rule(QuadratureFamily::gauss_hermite, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::order_out_of_range);
    }
  }
  EXPECT_NO_THROW(build_rule(QuadratureFamily::gauss_laguerre, 256));
}

TEST(Differentiate, Examples) {
  auto square = [](double x) { return x * x; };
  EXPECT_NEAR(differentiate(square, 3.0, {1e-3, 0, 1}).value, 6.0, 1e-10);
  auto sine = [](double x) { return std::sin(x); };
  EXPECT_NEAR(differentiate(sine, 0.0, {1e-3, 1, 2}).value, 0.0, 1e-9);
  auto expo = [](double x) { return std::exp(x); };
  const auto d = differentiate(expo, 1.0, {1e-3, 1, 1});
  EXPECT_NEAR(d.value, std::numbers::e, 1e-11);
  EXPECT_LT(d.error, 1e-9);
}

TEST(Differentiate, FourthDerivative) {
  auto quartic = [](double x) { return x * x * x * x; };
  EXPECT_NEAR(differentiate(quartic, 0.7, {1e-1, 1, 4}).value, 24.0, 1e-8);
}

TEST(Differentiate, ComplexValued) {
  auto f = [](double x) { return std::exp(std::complex<double>(0.0, 2.0 * x)); };
  const auto d = differentiate(f, 0.3, {1e-3, 1, 1});
  EXPECT_LT(std::abs(d.value - std::complex<double>(0.0, 2.0) * f(0.3)), 1e-11);
}

TEST(Differentiate, ErrorEstimateBoundsTrueError) {
  auto expo = [](double x) { return std::exp(x); };
  for (int levels = 0; levels <= 2; ++levels) {
    const auto d = differentiate(expo, 0.5, {5e-2, levels, 1});
    EXPECT_LE(std::abs(d.value - std::exp(0.5)), 2.0 * d.error + 1e-15) << levels;
  }
}

TEST(Differentiate, StencilOutOfDomain) {
  auto f = [](double x) { return std::sqrt(x); };
  try {
    differentiate(f, 1e-4, {1e-3, 1, 1}, Interval{0.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::stencil_out_of_domain);
  }
}

TEST(Differentiate, InvalidSpec) {
  auto f = [](double x) { return x; };
  EXPECT_THROW(differentiate(f, 0.0, {1e-3, 3, 1}), Error);
  EXPECT_THROW(differentiate(f, 0.0, {1e-3, 1, 3}), Error);
  EXPECT_THROW(differentiate(f, 0.0, {0.0, 1, 1}), Error);
}

TEST(ConvergenceOrder, RatioOfFour) { EXPECT_DOUBLE_EQ(convergence_order(4e-4, 1e-4), 2.0); }

}  // namespace
}  // namespace qho::numerics
