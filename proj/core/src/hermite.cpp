#include "qho/hermite.hpp"

#include <string>

#include "qho/error.hpp"

namespace qho {

namespace {

void check_degree(int l, int l_max) {
  if (l < 0) {
    throw Error(ErrorCode::domain_error, "Hermite degree must be non-negative");
  }
  if (l > l_max) {
    throw Error(ErrorCode::degree_too_large,
                "Hermite degree " + std::to_string(l) + " exceeds l_max " +
                    std::to_string(l_max));
  }
}

}  // namespace

double hermite_eval(int l, double x, int l_max) {
  check_degree(l, l_max);
  double previous = 1.0;
  if (l == 0) return previous;
  double current = 2.0 * x;
  for (int k = 1; k < l; ++k) {
    const double next = 2.0 * x * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

double hermite_derivative(int l, double x, int l_max) {
  check_degree(l, l_max);
  if (l == 0) return 0.0;
  return 2.0 * l * hermite_eval(l - 1, x, l_max);
}

double hermite_second_derivative(int l, double x, int l_max) {
  check_degree(l, l_max);
  if (l < 2) return 0.0;
  return 4.0 * l * (l - 1) * hermite_eval(l - 2, x, l_max);
}

HermitePoly hermite_poly(int l, int l_max) {
  check_degree(l, l_max);
  using exact::LaurentPoly;
  LaurentPoly previous = LaurentPoly::constant(1);
  if (l == 0) return {0, previous};
  LaurentPoly current = LaurentPoly::monomial(2, 1);
  for (int k = 1; k < l; ++k) {
    LaurentPoly next = current.times_variable().scaled(2) - previous.scaled(2 * k);
    previous = std::move(current);
    current = std::move(next);
  }
  return {l, current};
}

}  // namespace qho
