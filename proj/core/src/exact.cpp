#include "qho/exact.hpp"

#include <cmath>
#include <sstream>

#include "qho/error.hpp"

namespace qho::exact {

namespace mp = boost::multiprecision;

BigInt factorial(int n) {
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

namespace {

std::optional<BigInt> integer_sqrt(const BigInt& value) {
  if (value < 0) return std::nullopt;
  BigInt root = mp::sqrt(value);
  if (root * root != value) return std::nullopt;
  return root;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  auto num = integer_sqrt(mp::numerator(value));
  auto den = integer_sqrt(mp::denominator(value));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << mp::numerator(value);
  if (mp::denominator(value) != 1) out << "/" << mp::denominator(value);
  return out.str();
}

Surd Surd::from_rational(const Rational& value) {
  Surd s;
  s.sign_ = sign_of(value);
  s.square_ = value * value;
  return s;
}

Surd Surd::sqrt_of(const Rational& square) {
  if (square < 0) {
    throw Error(ErrorCode::domain_error, "square root of a negative rational");
  }
  Surd s;
  s.sign_ = square == 0 ? 0 : 1;
  s.square_ = square;
  return s;
}

double Surd::to_double() const {
  return sign_ * std::sqrt(square_.convert_to<double>());
}

std::optional<Rational> Surd::as_rational() const {
  auto root = rational_sqrt(square_);
  if (!root) return std::nullopt;
  return sign_ < 0 ? Rational(-*root) : *root;
}

std::string Surd::to_string() const {
  if (sign_ == 0) return "0";
  if (auto r = as_rational()) return exact::to_string(*r);
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + exact::to_string(square_) + ")";
}

Surd Surd::operator-() const {
  Surd s = *this;
  s.sign_ = -s.sign_;
  return s;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd s;
  s.sign_ = a.sign_ * b.sign_;
  s.square_ = s.sign_ == 0 ? Rational(0) : Rational(a.square_ * b.square_);
  return s;
}

std::optional<Rational> ratio(const Surd& a, const Surd& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::domain_error, "ratio by a zero surd");
  }
  if (a.is_zero()) return Rational(0);
  auto root = rational_sqrt(a.square() / b.square());
  if (!root) return std::nullopt;
  return a.sign() * b.sign() < 0 ? Rational(-*root) : *root;
}

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, int power) {
  LaurentPoly p;
  p.add_term(power, coefficient);
  return p;
}

void LaurentPoly::add_term(int power, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::domain_error, "degree of the zero polynomial");
  }
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly d;
  for (const auto& [p, c] : terms_) d.add_term(p - 1, c * p);
  return d;
}

LaurentPoly LaurentPoly::times_variable(int shift) const {
  LaurentPoly r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p + shift, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& factor) const {
  LaurentPoly r;
  if (factor == 0) return r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, c * factor);
  return r;
}

double LaurentPoly::evaluate(double v) const {
  double sum = 0.0;
  for (const auto& [p, c] : terms_) sum += c.convert_to<double>() * std::pow(v, p);
  return sum;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [p, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const BigInt mag = mp::abs(c);
    if (p == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << var;
    if (p != 1) out << "^" << p;
  }
  return out.str();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [p, c] : b.terms_) r.add_term(p, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [p, c] : b.terms_) r.add_term(p, -c);
  return r;
}

std::optional<Rational> proportionality(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::domain_error, "proportionality to the zero polynomial");
  }
  if (a.is_zero()) return Rational(0);
  const int lead = b.degree();
  const Rational r(a.coefficient(lead), b.coefficient(lead));
  if (r == 0) return std::nullopt;
  const BigInt num = mp::numerator(r);
  const BigInt den = mp::denominator(r);
  // a == r b  <=>  den * a == num * b
  if (a.scaled(den) != b.scaled(num)) return std::nullopt;
  return r;
}

LaurentMonomial LaurentMonomial::derivative() const {
  return {coefficient * Surd::from_rational(power), power - 1};
}

double LaurentMonomial::evaluate(double v) const {
  return coefficient.to_double() * std::pow(v, power);
}

LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b) {
  return {a.coefficient * b.coefficient, a.power + b.power};
}

SymbolicFunction SymbolicFunction::from(const LaurentMonomial& m) {
  if (m.coefficient.is_zero()) return {};
  return {m.coefficient, LaurentPoly::monomial(1, m.power)};
}

double SymbolicFunction::evaluate(double v) const {
  return coefficient.to_double() * poly.evaluate(v);
}

std::string SymbolicFunction::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  return coefficient.to_string() + " * (" + poly.to_string(var) + ")";
}

bool equal(const SymbolicFunction& a, const SymbolicFunction& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto r = proportionality(a.poly, b.poly);
  if (!r) return false;
  return a.coefficient * Surd::from_rational(*r) == b.coefficient;
}

SymbolicFunction difference(const SymbolicFunction& a, const SymbolicFunction& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return {-b.coefficient, b.poly};
  auto rho = ratio(b.coefficient, a.coefficient);
  if (!rho) {
    throw Error(ErrorCode::domain_error,
                "difference of symbolic functions with incommensurate coefficients");
  }
  const BigInt p = mp::numerator(*rho);
  const BigInt q = mp::denominator(*rho);
  LaurentPoly poly = a.poly.scaled(q) - b.poly.scaled(p);
  if (poly.is_zero()) return {};
  return {a.coefficient * Surd::from_rational(Rational(1, q)), poly};
}

std::optional<Rational> proportionality(const SymbolicFunction& a,
                                         const SymbolicFunction& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::domain_error, "proportionality to the zero function");
  }
  if (a.is_zero()) return Rational(0);
  auto r_poly = proportionality(a.poly, b.poly);
  if (!r_poly) return std::nullopt;
  auto r_coef = ratio(a.coefficient, b.coefficient);
  if (!r_coef) return std::nullopt;
  return Rational(*r_poly * *r_coef);
}

}  // namespace qho::exact
