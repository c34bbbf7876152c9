#include "qho/bargmann.hpp"

#include <cmath>
#include <numbers>

#include "qho/error.hpp"
#include "qho/hermite.hpp"
#include "qho/numerics.hpp"

namespace qho {

using exact::LaurentPoly;
using exact::Rational;
using exact::Surd;
using exact::SymbolicFunction;

std::string_view to_string(KernelSign sign) {
  return sign == KernelSign::plus ? "plus" : "minus";
}

std::string_view to_string(PrefactorMode mode) {
  return mode == PrefactorMode::paper ? "paper" : "table";
}

std::optional<KernelSign> parse_kernel_sign(std::string_view text) {
  if (text == "plus" || text == "+") return KernelSign::plus;
  if (text == "minus" || text == "-") return KernelSign::minus;
  return std::nullopt;
}

std::optional<PrefactorMode> parse_prefactor_mode(std::string_view text) {
  if (text == "paper") return PrefactorMode::paper;
  if (text == "table") return PrefactorMode::table;
  return std::nullopt;
}

namespace {

void check_level(int l) {
  if (l < 0) throw Error(ErrorCode::domain_error, "level must be non-negative");
  if (l > kMaxTransformLevel) {
    throw Error(ErrorCode::degree_too_large,
                "transform level " + std::to_string(l) + " exceeds " +
                    std::to_string(kMaxTransformLevel));
  }
}

double quarter_root_pi_inverse() { return std::pow(std::numbers::pi, -0.25); }

double sb_quadrature(int l, double a, KernelSign sign, int order) {
  const auto& rule = numerics::cached_rule(numerics::QuadratureFamily::gauss_hermite, order);
  const double cross = (sign == KernelSign::plus ? 1.0 : -1.0) * std::numbers::sqrt2 * a;
  // unit-norm phi_l(xi) = pi^{-1/4} (2^l l!)^{-1/2} H_l(xi) e^{-xi^2/2}; the
  // two e^{-xi^2/2} factors form the rule's weight.
  const double phi_norm =
      quarter_root_pi_inverse() *
      std::exp(-0.5 * (l * std::numbers::ln2 + std::lgamma(l + 1.0)));
  const double sum = rule.integrate([&](double xi) {
    return hermite_eval(l, xi) * std::exp(cross * xi - 0.5 * a * a);
  });
  return quarter_root_pi_inverse() * phi_norm * sum;
}

}  // namespace

double sb_transform(int l, double a, KernelSign sign, int quadrature_order) {
  check_level(l);
  if (quadrature_order < l + 30) {
    throw Error(ErrorCode::quadrature_order_too_low,
                "Segal-Bargmann quadrature needs order >= l + 30");
  }
  const double value = sb_quadrature(l, a, sign, quadrature_order);
  const double refined = sb_quadrature(l, a, sign, quadrature_order + 10);
  if (std::abs(refined - value) > 1e-10 * std::max(1.0, std::abs(value))) {
    throw Error(ErrorCode::quadrature_order_too_low,
                "Segal-Bargmann quadrature not converged at order " +
                    std::to_string(quadrature_order));
  }
  return value;
}

double sb_closed_form(int l, double a, KernelSign sign) {
  const double magnitude = std::pow(a, l) / std::sqrt(std::tgamma(l + 1.0));
  return sign == KernelSign::minus && l % 2 == 1 ? -magnitude : magnitude;
}

double conjugate_transform(int l, double b, PrefactorMode mode, int quadrature_order) {
  check_level(l);
  if (!(b > 0.0)) {
    throw Error(ErrorCode::domain_error, "conjugate transform needs b > 0");
  }
  const int order = quadrature_order == 0 ? l + 20 : quadrature_order;
  if (order < l + 20) {
    throw Error(ErrorCode::quadrature_order_too_low,
                "conjugate quadrature needs order >= l + 20");
  }
  auto integrate = [&](int n) {
    const auto& rule = numerics::cached_rule(numerics::QuadratureFamily::gauss_laguerre, n);
    // a = v / b:  int_0^inf a^l e^{-ab} da = b^{-l-1} int_0^inf v^l e^{-v} dv
    return rule.integrate([&](double v) { return std::pow(v, l); }) /
           (std::sqrt(std::tgamma(l + 1.0)) * std::pow(b, l + 1));
  };
  const double value = integrate(order);
  const double refined = integrate(order + 10);
  if (std::abs(refined - value) > 1e-10 * std::max(1.0, std::abs(value))) {
    throw Error(ErrorCode::quadrature_order_too_low,
                "conjugate quadrature not converged at order " + std::to_string(order));
  }
  return mode == PrefactorMode::paper ? quarter_root_pi_inverse() * value : value;
}

double conjugate_closed_form(int l, double b) {
  return std::sqrt(std::tgamma(l + 1.0)) / std::pow(b, l + 1);
}

std::string_view to_string(Table1Space space) {
  switch (space) {
    case Table1Space::bargmann: return "bargmann";
    case Table1Space::conjugate: return "conjugate";
    case Table1Space::conformal: return "conformal";
  }
  return "?";
}

Table1Row table1_row(Table1Space space) {
  switch (space) {
    case Table1Space::bargmann:
      return {space, "a", "d/da", "a", "a^l / sqrt(l!)"};
    case Table1Space::conjugate:
      return {space, "b", "b", "-d/db", "sqrt(l!) / b^(l+1)"};
    case Table1Space::conformal:
      return {space, "zeta", "2^(-1/2) d/dzeta", "-2^(-1/2) d/dzeta*", "k_l H_l(zeta)"};
  }
  throw Error(ErrorCode::domain_error, "unknown space");
}

SymbolicFunction table1_eigenfunction(Table1Space space, int l) {
  if (l < 0) throw Error(ErrorCode::domain_error, "level must be non-negative");
  const exact::BigInt fact = exact::factorial(l);
  switch (space) {
    case Table1Space::bargmann:
      return {Surd::sqrt_of(Rational(1, fact)), LaurentPoly::monomial(1, l)};
    case Table1Space::conjugate:
      return {Surd::sqrt_of(Rational(fact)), LaurentPoly::monomial(1, -l - 1)};
    case Table1Space::conformal: {
      const exact::BigInt two_l = exact::BigInt(1) << l;
      return {Surd::sqrt_of(Rational(1, exact::BigInt(two_l * fact))), hermite_poly(l).coefficients};
    }
  }
  throw Error(ErrorCode::domain_error, "unknown space");
}

SymbolicFunction table1_apply(Table1Space space, LadderDirection direction,
                              const SymbolicFunction& f) {
  const bool lower = direction == LadderDirection::lower;
  const Surd inv_sqrt2 = Surd::sqrt_of(Rational(1, 2));
  switch (space) {
    case Table1Space::bargmann:
      return lower ? SymbolicFunction{f.coefficient, f.poly.derivative()}
                   : SymbolicFunction{f.coefficient, f.poly.times_variable()};
    case Table1Space::conjugate:
      return lower ? SymbolicFunction{f.coefficient, f.poly.times_variable()}
                   : SymbolicFunction{-f.coefficient, f.poly.derivative()};
    case Table1Space::conformal: {
      if (lower) return {f.coefficient * inv_sqrt2, f.poly.derivative()};
      // (d/dxi - xi)[P e^{-xi^2/2}] = (P' - 2 xi P) e^{-xi^2/2}
      const LaurentPoly real_form = f.poly.derivative() - f.poly.times_variable().scaled(2);
      return {-(f.coefficient * inv_sqrt2), real_form};
    }
  }
  throw Error(ErrorCode::domain_error, "unknown space");
}

namespace {

std::string symbolic_anchor(Table1Space space, LadderDirection direction) {
  const Table1Row row = table1_row(space);
  return direction == LadderDirection::lower
             ? row.lower_op + " f_l = sqrt(l) f_{l-1}, f_l = " + row.eigenfunction
             : row.raise_op + " f_l = sqrt(l+1) f_{l+1}, f_l = " + row.eigenfunction;
}

}  // namespace

CheckReport table1_ladder_check(Table1Space space, int l, LadderDirection direction) {
  const std::string var = table1_row(space).variable;
  const SymbolicFunction f = table1_eigenfunction(space, l);
  const SymbolicFunction result = table1_apply(space, direction, f);
  SymbolicFunction expected;
  if (direction == LadderDirection::raise) {
    expected = table1_eigenfunction(space, l + 1).scaled(Surd::sqrt_of(l + 1));
  } else if (l > 0) {
    expected = table1_eigenfunction(space, l - 1).scaled(Surd::sqrt_of(l));
  }
  const bool ok = exact::equal(result, expected);
  auto report = CheckReport::make("table1-" + std::string(to_string(space)) + "-" +
                                      std::string(to_string(direction)) + "-l" +
                                      std::to_string(l),
                                  symbolic_anchor(space, direction), ok ? 0.0 : 1.0, 0.0);
  report.detail("result", result.to_string(var)).detail("expected", expected.to_string(var));
  return report;
}

CheckReport table1_schrodinger_check(Table1Space space, const StateLabel& state) {
  Rational eigenvalue(3, 2);
  bool proportional = true;
  for (int axis = 0; axis < 3; ++axis) {
    const SymbolicFunction f = table1_eigenfunction(space, state[axis]);
    const SymbolicFunction number =
        table1_apply(space, LadderDirection::raise, table1_apply(space, LadderDirection::lower, f));
    const auto rho = exact::proportionality(number, f);
    if (!rho) {
      proportional = false;
      break;
    }
    eigenvalue += *rho;
  }
  const Rational expected = Rational(state.total()) + Rational(3, 2);
  const double measured =
      proportional ? std::abs((eigenvalue - expected).convert_to<double>()) : 1.0;
  auto report = CheckReport::make(
      "table1-" + std::string(to_string(space)) + "-number" + state.to_string(),
      "(sum_i a_i^dagger a_i + 3/2) f = (n + 3/2) f in the " +
          std::string(to_string(space)) + " space",
      measured, 0.0);
  report.detail("eigenfunction_of_number_operator", proportional)
      .detail("eigenvalue", proportional ? exact::to_string(eigenvalue) : std::string("none"))
      .detail("expected", exact::to_string(expected));
  return report;
}

CheckReport table1_commutator_check(Table1Space space, int l) {
  const SymbolicFunction f = table1_eigenfunction(space, l);
  const auto up = [&](const SymbolicFunction& g) {
    return table1_apply(space, LadderDirection::raise, g);
  };
  const auto down = [&](const SymbolicFunction& g) {
    return table1_apply(space, LadderDirection::lower, g);
  };
  const SymbolicFunction commutator = exact::difference(down(up(f)), up(down(f)));
  const bool ok = exact::equal(commutator, f);
  auto report = CheckReport::make(
      "table1-" + std::string(to_string(space)) + "-commutator-l" + std::to_string(l),
      "(a a^dagger - a^dagger a) f_l = f_l", ok ? 0.0 : 1.0, 0.0);
  report.detail("result", commutator.to_string(table1_row(space).variable));
  return report;
}

}  // namespace qho
