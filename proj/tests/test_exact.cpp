#include <gtest/gtest.h>

#include "qho/error.hpp"
#include "qho/exact.hpp"

namespace qho::exact {
namespace {

TEST(Factorial, SmallAndLarge) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
}

TEST(RationalSqrt, PerfectSquaresOnly) {
  EXPECT_EQ(rational_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_EQ(rational_sqrt(Rational(0)), Rational(0));
}

TEST(Surd, ProductOfRootsIsExact) {
  // sqrt(2) * sqrt(8) = 4
  const Surd product = Surd::sqrt_of(2) * Surd::sqrt_of(8);
  EXPECT_EQ(product.as_rational(), Rational(4));
  EXPECT_EQ(product, Surd::from_rational(4));
}

TEST(Surd, SignAndZero) {
  const Surd minus_half = Surd::from_rational(Rational(-1, 2));
  EXPECT_EQ(minus_half.sign(), -1);
  EXPECT_EQ(minus_half.square(), Rational(1, 4));
  EXPECT_TRUE((minus_half * Surd::zero()).is_zero());
  EXPECT_EQ(-minus_half, Surd::from_rational(Rational(1, 2)));
  EXPECT_DOUBLE_EQ(Surd::sqrt_of(Rational(1, 3)).to_double(), 1.0 / std::sqrt(3.0));
}

TEST(Surd, RatioDetectsIrrational) {
  EXPECT_EQ(ratio(Surd::sqrt_of(8), Surd::sqrt_of(2)), Rational(2));
  EXPECT_FALSE(ratio(Surd::sqrt_of(3), Surd::sqrt_of(2)).has_value());
}

TEST(LaurentPoly, DerivativeOfNegativePowers) {
  // d/db b^{-1} = -b^{-2}
  const LaurentPoly p = LaurentPoly::monomial(1, -1);
  EXPECT_EQ(p.derivative(), LaurentPoly::monomial(-1, -2));
  EXPECT_TRUE(LaurentPoly::constant(7).derivative().is_zero());
}

TEST(LaurentPoly, ArithmeticCancels) {
  const LaurentPoly a = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(1, 0);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.times_variable(-2), LaurentPoly::monomial(3, 0) + LaurentPoly::monomial(1, -2));
  EXPECT_EQ(a.degree(), 2);
  EXPECT_DOUBLE_EQ(a.evaluate(2.0), 13.0);
}

TEST(LaurentPoly, Proportionality) {
  const LaurentPoly a = LaurentPoly::monomial(4, 2) - LaurentPoly::constant(2);
  EXPECT_EQ(proportionality(a.scaled(3), a), Rational(3));
  EXPECT_FALSE(proportionality(a, LaurentPoly::monomial(1, 2)).has_value());
}

TEST(SymbolicFunction, EqualityAcrossCoefficientSplits) {
  // sqrt(2) * (2 v) == sqrt(8) * v
  const SymbolicFunction a{Surd::sqrt_of(2), LaurentPoly::monomial(2, 1)};
  const SymbolicFunction b{Surd::sqrt_of(8), LaurentPoly::monomial(1, 1)};
  EXPECT_TRUE(equal(a, b));
  EXPECT_TRUE(difference(a, b).is_zero());
}

TEST(SymbolicFunction, IrrationalDifferenceThrows) {
  const SymbolicFunction a{Surd::sqrt_of(2), LaurentPoly::monomial(1, 1)};
  const SymbolicFunction b{Surd::sqrt_of(3), LaurentPoly::monomial(1, 1)};
  EXPECT_FALSE(equal(a, b));
  EXPECT_THROW(difference(a, b), Error);
}

}  // namespace
}  // namespace qho::exact
