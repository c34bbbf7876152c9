#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qho/error.hpp"

namespace qho::numerics {

enum class QuadratureFamily { gauss_hermite, gauss_laguerre };

/// Gaussian rule for weight exp(-x^2) on R (Hermite) or exp(-x) on [0, inf)
/// (Laguerre). Nodes are ascending.
struct QuadratureRule {
  QuadratureFamily family = QuadratureFamily::gauss_hermite;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  /// sum_j w_j f(x_j)
  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R sum{};
    for (std::size_t j = 0; j < nodes.size(); ++j) sum += weights[j] * f(nodes[j]);
    return sum;
  }
};

inline constexpr int kMaxQuadratureOrder = 256;

/// Golub-Welsch on the Jacobi matrix of the family's recurrence, followed by
/// Newton polishing of the nodes and Christoffel-sum weights.
/// Throws Error(order_out_of_range) unless 1 <= order <= 256.
QuadratureRule build_rule(QuadratureFamily family, int order);

/// Process-wide cache of rules; returned references stay valid forever.
const QuadratureRule& cached_rule(QuadratureFamily family, int order);

struct StencilSpec {
  double step = 1e-3;
  int richardson_levels = 1;  // 0..2
  int derivative_order = 1;   // 1, 2 or 4

  void validate() const;
  /// Largest |offset| of any stencil point from the evaluation point.
  double reach() const;
  /// 2 + 2 * richardson_levels
  int theoretical_order() const { return 2 + 2 * richardson_levels; }
};

/// Closed interval the stencil is allowed to sample.
struct Interval {
  double lo;
  double hi;
};

template <class T>
struct DerivativeEstimate {
  T value{};
  /// |top Richardson level - level below it|, or the step-halving difference
  /// when no extrapolation is requested.
  double error = 0.0;
};

namespace detail {

template <class T, class F>
T central_difference(F& f, double x, double h, int order) {
  switch (order) {
    case 1:
      return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2:
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 4:
      return (f(x + 2.0 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) +
              f(x - 2.0 * h)) /
             (h * h * h * h);
  }
  throw Error(ErrorCode::domain_error, "unsupported derivative order");
}

}  // namespace detail

/// Central-difference derivative with Richardson extrapolation over step
/// halvings. Works for real or complex valued f.
template <class F>
auto differentiate(F&& f, double x, const StencilSpec& spec,
                   std::optional<Interval> domain = std::nullopt)
    -> DerivativeEstimate<decltype(f(0.0))> {
  using T = decltype(f(0.0));
  spec.validate();
  if (domain && (x - spec.reach() < domain->lo || x + spec.reach() > domain->hi)) {
    throw Error(ErrorCode::stencil_out_of_domain,
                "stencil around " + std::to_string(x) + " leaves the sampled interval");
  }
  const int levels = spec.richardson_levels;
  // table[k][j]: j-th extrapolation of the estimate with step h / 2^k
  std::vector<std::vector<T>> table(static_cast<std::size_t>(levels) + 2);
  double h = spec.step;
  for (int k = 0; k <= levels + 1; ++k, h *= 0.5) {
    auto& row = table[static_cast<std::size_t>(k)];
    row.push_back(detail::central_difference<T>(f, x, h, spec.derivative_order));
    double factor = 4.0;
    for (int j = 1; j <= k; ++j, factor *= 4.0) {
      const T& fine = row[static_cast<std::size_t>(j - 1)];
      const T& coarse = table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
      row.push_back((factor * fine - coarse) / (factor - 1.0));
    }
  }
  // The estimate uses `levels` extrapolations on the first levels+1 rows;
  // the extra row only feeds the error estimate.
  const T value = table[static_cast<std::size_t>(levels)][static_cast<std::size_t>(levels)];
  const T refined =
      table[static_cast<std::size_t>(levels + 1)][static_cast<std::size_t>(levels + 1)];
  return {value, std::abs(refined - value)};
}

/// log2(coarse_error / fine_error) for a step ratio of 2.
double convergence_order(double coarse_error, double fine_error);

}  // namespace qho::numerics
