#include <gtest/gtest.h>

#include <cmath>

#include "qho/error.hpp"
#include "qho/hermite.hpp"
#include "qho/numerics.hpp"

namespace qho {
namespace {

/// Explicit series H_l(x) = l! sum_m (-1)^m (2x)^{l-2m} / (m! (l-2m)!).
long double explicit_series(int l, long double x) {
  long double sum = 0.0L;
  for (int m = 0; 2 * m <= l; ++m) {
    const long double term = std::pow(2.0L * x, l - 2 * m) /
                             (std::tgamma(m + 1.0L) * std::tgamma(l - 2 * m + 1.0L));
    sum += (m % 2 == 0 ? 1.0L : -1.0L) * term;
  }
  return std::tgamma(l + 1.0L) * sum;
}

TEST(HermiteEval, Examples) {
  EXPECT_EQ(hermite_eval(0, 0.7), 1.0);
  EXPECT_DOUBLE_EQ(hermite_eval(1, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(hermite_eval(2, 1.0), 2.0);
}

TEST(HermiteEval, MatchesExplicitSeries) {
  for (int l = 0; l <= 15; ++l) {
    for (double x : {-2.3, -1.0, -0.1, 0.0, 0.4, 1.7, 3.0}) {
      const double expected = static_cast<double>(explicit_series(l, x));
      EXPECT_NEAR(hermite_eval(l, x), expected, 1e-12 * std::max(1.0, std::abs(expected)))
          << "l=" << l << " x=" << x;
    }
  }
}

TEST(HermiteEval, ParityAndValueAtZero) {
  for (int l = 0; l <= 20; ++l) {
    EXPECT_EQ(hermite_eval(l, -1.3), (l % 2 == 0 ? 1 : -1) * hermite_eval(l, 1.3));
    if (l % 2 == 1) {
      EXPECT_EQ(hermite_eval(l, 0.0), 0.0);
    }
  }
  // H_{2k}(0) = (-1)^k (2k)! / k!
  EXPECT_DOUBLE_EQ(hermite_eval(4, 0.0), 12.0);
  EXPECT_DOUBLE_EQ(hermite_eval(6, 0.0), -120.0);
}

TEST(HermiteEval, Errors) {
  try {
    hermite_eval(11, 0.5, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degree_too_large);
  }
  try {
    hermite_eval(-1, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::domain_error);
  }
}

TEST(HermiteDerivative, Examples) {
  EXPECT_EQ(hermite_derivative(0, 3.2), 0.0);
  EXPECT_EQ(hermite_derivative(1, 9.9), 2.0);
  EXPECT_DOUBLE_EQ(hermite_derivative(3, 0.5), -6.0);
}

TEST(HermiteDerivative, AgreesWithRichardsonDifference) {
  const numerics::StencilSpec spec{1e-2, 2, 1};
  const numerics::StencilSpec spec2{1e-2, 2, 2};
  for (int l = 0; l <= 10; ++l) {
    for (double x : {-1.5, 0.3, 1.1}) {
      auto h = [l](double v) { return hermite_eval(l, v); };
      const double scale = std::max(1.0, std::abs(hermite_eval(l, x)));
      EXPECT_NEAR(hermite_derivative(l, x), numerics::differentiate(h, x, spec).value,
                  1e-8 * scale * (l + 1));
      EXPECT_NEAR(hermite_second_derivative(l, x), numerics::differentiate(h, x, spec2).value,
                  1e-6 * scale * (l + 1) * (l + 1));
    }
  }
}

TEST(HermitePoly, ExactCoefficients) {
  const HermitePoly h4 = hermite_poly(4);
  EXPECT_EQ(h4.degree, 4);
  EXPECT_EQ(h4.coefficients.coefficient(4), 16);
  EXPECT_EQ(h4.coefficients.coefficient(2), -48);
  EXPECT_EQ(h4.coefficients.coefficient(0), 12);
  EXPECT_EQ(h4.coefficients.coefficient(3), 0);
  // Leading coefficient 2^l survives at high degree without overflow.
  EXPECT_EQ(hermite_poly(64).coefficients.coefficient(64), exact::BigInt(1) << 64);
}

TEST(HermitePoly, DerivativeIdentityExact) {
  for (int l = 1; l <= 30; ++l) {
    EXPECT_EQ(hermite_poly(l).coefficients.derivative(),
              hermite_poly(l - 1).coefficients.scaled(2 * l));
  }
}

}  // namespace
}  // namespace qho
