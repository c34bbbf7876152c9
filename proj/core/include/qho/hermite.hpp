#pragma once

#include "qho/exact.hpp"

namespace qho {

inline constexpr int kDefaultHermiteLMax = 64;

/// Physicists' Hermite polynomial H_l(x) by the three-term recurrence
/// H_{l+1} = 2x H_l - 2l H_{l-1}.
/// Throws Error(degree_too_large) when l > l_max, Error(domain_error) when l < 0.
double hermite_eval(int l, double x, int l_max = kDefaultHermiteLMax);

/// H_l'(x) = 2l H_{l-1}(x).
double hermite_derivative(int l, double x, int l_max = kDefaultHermiteLMax);

/// H_l''(x) = 4l(l-1) H_{l-2}(x).
double hermite_second_derivative(int l, double x, int l_max = kDefaultHermiteLMax);

/// H_l with exact integer coefficients; leading coefficient 2^l.
struct HermitePoly {
  int degree = 0;
  exact::LaurentPoly coefficients;

  double evaluate(double x) const { return coefficients.evaluate(x); }
};

HermitePoly hermite_poly(int l, int l_max = kDefaultHermiteLMax);

}  // namespace qho
