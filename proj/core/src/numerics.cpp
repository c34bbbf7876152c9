#include "qho/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace qho::numerics {

namespace {

// Three-term recurrence x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}
// of the orthonormal polynomials of each family.
struct Recurrence {
  QuadratureFamily family;

  double diagonal(int k) const {
    return family == QuadratureFamily::gauss_hermite ? 0.0 : 2.0 * k + 1.0;
  }
  double off_diagonal(int k) const {  // b_k, k >= 1
    return family == QuadratureFamily::gauss_hermite ? std::sqrt(0.5 * k)
                                                     : static_cast<double>(k);
  }
  double total_mass() const {
    return family == QuadratureFamily::gauss_hermite ? std::sqrt(std::numbers::pi) : 1.0;
  }
};

struct RecurrenceSweep {
  double p_order;       // p_N(x), up to the common scale
  double dp_order;      // p_N'(x), same scale
  double log_christoffel;  // log sum_{k<N} p_k(x)^2
};

// Runs the recurrence to degree N with overflow-safe rescaling.
RecurrenceSweep sweep(const Recurrence& rec, int order, double x) {
  constexpr double kLimit = 1e150;
  constexpr double kShrink = 1e-150;
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(rec.total_mass());
  double dp_prev = 0.0;
  double dp = 0.0;
  double sum = 0.0;
  double log_scale = 0.0;  // true values = stored * exp(log_scale)
  for (int k = 0; k < order; ++k) {
    sum += p * p;
    const double b_next = rec.off_diagonal(k + 1);
    const double b_k = k == 0 ? 0.0 : rec.off_diagonal(k);
    const double shifted = x - rec.diagonal(k);
    const double p_next = (shifted * p - b_k * p_prev) / b_next;
    const double dp_next = (shifted * dp + p - b_k * dp_prev) / b_next;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
    if (std::max(std::abs(p), std::abs(dp)) > kLimit) {
      p *= kShrink;
      p_prev *= kShrink;
      dp *= kShrink;
      dp_prev *= kShrink;
      sum *= kShrink * kShrink;
      log_scale -= std::log(kShrink);
    }
  }
  return {p, dp, std::log(sum) + 2.0 * log_scale};
}

}  // namespace

QuadratureRule build_rule(QuadratureFamily family, int order) {
  if (order < 1 || order > kMaxQuadratureOrder) {
    throw Error(ErrorCode::order_out_of_range,
                "quadrature order " + std::to_string(order) + " outside [1, " +
                    std::to_string(kMaxQuadratureOrder) + "]");
  }
  const Recurrence rec{family};
  Eigen::VectorXd diagonal(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int k = 0; k < order; ++k) diagonal[k] = rec.diagonal(k);
  for (int k = 1; k < order; ++k) sub[k - 1] = rec.off_diagonal(k);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();

  QuadratureRule rule;
  rule.family = family;
  rule.order = order;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j) {
    double x = eigenvalues[j];
    for (int iter = 0; iter < 4; ++iter) {
      const auto s = sweep(rec, order, x);
      if (s.dp_order == 0.0) break;
      const double dx = s.p_order / s.dp_order;
      x -= dx;
      if (std::abs(dx) <= 1e-17 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[static_cast<std::size_t>(j)] = x;
    rule.weights[static_cast<std::size_t>(j)] = std::exp(-sweep(rec, order, x).log_christoffel);
  }

  if (family == QuadratureFamily::gauss_hermite) {
    // Enforce exact symmetry about the origin.
    for (int j = 0; j < order / 2; ++j) {
      auto lo = static_cast<std::size_t>(j);
      auto hi = static_cast<std::size_t>(order - 1 - j);
      const double node = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
      const double weight = 0.5 * (rule.weights[hi] + rule.weights[lo]);
      rule.nodes[lo] = -node;
      rule.nodes[hi] = node;
      rule.weights[lo] = rule.weights[hi] = weight;
    }
    if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  }
  return rule;
}

const QuadratureRule& cached_rule(QuadratureFamily family, int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<QuadratureRule>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(family), order}];
  if (!slot) slot = std::make_unique<QuadratureRule>(build_rule(family, order));
  return *slot;
}

void StencilSpec::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::domain_error, "stencil step must be positive");
  }
  if (richardson_levels < 0 || richardson_levels > 2) {
    throw Error(ErrorCode::domain_error, "richardson_levels must be in 0..2");
  }
  if (derivative_order != 1 && derivative_order != 2 && derivative_order != 4) {
    throw Error(ErrorCode::domain_error, "derivative_order must be 1, 2 or 4");
  }
}

double StencilSpec::reach() const { return derivative_order == 4 ? 2.0 * step : step; }

double convergence_order(double coarse_error, double fine_error) {
  return std::log2(coarse_error / fine_error);
}

}  // namespace qho::numerics
