#pragma once

// Exact arithmetic used by the symbolic ladder checks: arbitrary precision
// integers and rationals, signed square roots of rationals, and integer
// Laurent polynomials in one variable.

#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qho::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& value);

std::string to_string(const Rational& value);

/// sign * sqrt(square) with square >= 0. Closed under multiplication, which
/// is all the ladder algebra needs: every coefficient that appears is a
/// product of square roots of rationals.
class Surd {
 public:
  Surd() = default;
  static Surd from_rational(const Rational& value);
  static Surd sqrt_of(const Rational& square);
  static Surd zero() { return {}; }

  int sign() const { return sign_; }
  const Rational& square() const { return square_; }
  bool is_zero() const { return sign_ == 0; }

  double to_double() const;
  /// Value as a rational when sqrt(square) is rational.
  std::optional<Rational> as_rational() const;
  std::string to_string() const;

  Surd operator-() const;
  friend Surd operator*(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) = default;

 private:
  int sign_ = 0;
  Rational square_ = 0;
};

/// a / b as a rational if it is one (b must be non-zero).
std::optional<Rational> ratio(const Surd& a, const Surd& b);

/// Sparse integer Laurent polynomial sum_k c_k v^k, k may be negative.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(const BigInt& coefficient, int power);
  static LaurentPoly constant(const BigInt& c) { return monomial(c, 0); }

  BigInt coefficient(int power) const;
  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  LaurentPoly derivative() const;
  LaurentPoly times_variable(int shift = 1) const;
  LaurentPoly scaled(const BigInt& factor) const;

  double evaluate(double v) const;
  std::string to_string(const std::string& var) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  void add_term(int power, const BigInt& c);
  std::map<int, BigInt> terms_;
};

/// r with a == r * b, if such a rational exists (b must be non-zero).
std::optional<Rational> proportionality(const LaurentPoly& a, const LaurentPoly& b);

/// c * v^p with an exact surd coefficient.
struct LaurentMonomial {
  Surd coefficient;
  int power = 0;

  LaurentMonomial derivative() const;
  double evaluate(double v) const;

  friend LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b);
  friend bool operator==(const LaurentMonomial& a, const LaurentMonomial& b) = default;
};

/// surd * P(v): the general symbolic function the Table-1 algebra works in.
struct SymbolicFunction {
  Surd coefficient;
  LaurentPoly poly;

  static SymbolicFunction from(const LaurentMonomial& m);

  bool is_zero() const { return coefficient.is_zero() || poly.is_zero(); }
  SymbolicFunction scaled(const Surd& s) const { return {coefficient * s, poly}; }
  double evaluate(double v) const;
  std::string to_string(const std::string& var) const;
};

/// Exact equality of two symbolic functions.
bool equal(const SymbolicFunction& a, const SymbolicFunction& b);

/// a - b; throws Error(domain_error) when the coefficient ratio is irrational.
SymbolicFunction difference(const SymbolicFunction& a, const SymbolicFunction& b);

/// r with a == r * b, if any.
std::optional<Rational> proportionality(const SymbolicFunction& a,
                                         const SymbolicFunction& b);

}  // namespace qho::exact
