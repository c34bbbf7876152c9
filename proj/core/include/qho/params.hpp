#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace qho {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline double norm_squared(const Vec3& v) {
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

/// Physical constants of the isotropic oscillator. omega is an angular
/// frequency (rad/s); omega == 0 is the free-particle limit.
struct OscillatorParams {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;

  static OscillatorParams natural() { return {}; }

  /// Throws Error(config_invalid) unless hbar > 0, mass > 0, omega >= 0.
  void validate() const;

  /// sqrt(m omega / hbar); converts lengths to the dimensionless xi.
  double xi_scale() const;

  bool confining() const { return omega > 0.0; }

  friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;
};

/// Quantum numbers (l1, l2, l3) of a separable eigenstate.
struct StateLabel {
  std::array<int, 3> l{0, 0, 0};

  StateLabel() = default;
  StateLabel(int l1, int l2, int l3);

  int operator[](int axis) const { return l[static_cast<std::size_t>(axis)]; }
  int total() const { return l[0] + l[1] + l[2]; }
  std::string to_string() const;

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

struct Energy {
  double value = 0.0;
  int n = 0;
};

/// hbar omega (n + 3/2).
Energy energy_of(const StateLabel& state, const OscillatorParams& params);

double xi_coordinate(double x, const OscillatorParams& params);

/// 1/2 m omega^2 |x|^2. Every call increments a process-wide counter so
/// callers can assert that an evaluation path never touched the potential.
double potential_energy(const Vec3& x, const OscillatorParams& params);
std::uint64_t potential_evaluations();

}  // namespace qho
