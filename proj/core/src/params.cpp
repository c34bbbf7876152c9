#include "qho/params.hpp"

#include <atomic>
#include <cmath>

#include "qho/error.hpp"

namespace qho {

namespace {
std::atomic<std::uint64_t> potential_counter{0};
}

void OscillatorParams::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw Error(ErrorCode::config_invalid, "hbar must be positive and finite");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw Error(ErrorCode::config_invalid, "mass must be positive and finite");
  }
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorCode::config_invalid, "omega must be non-negative and finite");
  }
}

double OscillatorParams::xi_scale() const { return std::sqrt(mass * omega / hbar); }

StateLabel::StateLabel(int l1, int l2, int l3) : l{l1, l2, l3} {
  if (l1 < 0 || l2 < 0 || l3 < 0) {
    throw Error(ErrorCode::domain_error, "quantum numbers must be non-negative");
  }
}

std::string StateLabel::to_string() const {
  return "(" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," +
         std::to_string(l[2]) + ")";
}

Energy energy_of(const StateLabel& state, const OscillatorParams& params) {
  const int n = state.total();
  return {params.hbar * params.omega * (n + 1.5), n};
}

double xi_coordinate(double x, const OscillatorParams& params) {
  return params.xi_scale() * x;
}

double potential_energy(const Vec3& x, const OscillatorParams& params) {
  potential_counter.fetch_add(1, std::memory_order_relaxed);
  return 0.5 * params.mass * params.omega * params.omega * norm_squared(x);
}

std::uint64_t potential_evaluations() {
  return potential_counter.load(std::memory_order_relaxed);
}

}  // namespace qho
