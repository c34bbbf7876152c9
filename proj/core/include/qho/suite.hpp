#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qho/bargmann.hpp"
#include "qho/eigenfunctions.hpp"
#include "qho/ladder.hpp"
#include "qho/params.hpp"
#include "qho/report.hpp"

namespace qho {

inline constexpr std::uint64_t kDefaultSeed = 20241015;

/// Everything a verification run depends on. Defaults reproduce the
/// acceptance configuration.
struct SuiteConfig {
  OscillatorParams params;
  int l_max = 10;
  double grid_extent = 6.0;  // xi units
  int grid_points = 121;
  int quad_order = 64;
  double tolerance_scale = 1.0;
  NormMode norm_mode = NormMode::unit_norm;
  KernelSign kernel_sign = KernelSign::plus;
  PrefactorMode prefactor_mode = PrefactorMode::table;
  std::uint64_t seed = kDefaultSeed;

  /// Throws Error(config_invalid) on any out-of-range field.
  void validate() const;
  ConfigSnapshot snapshot() const;
};

/// Runs every registered check in registration order. Individual failures
/// are recorded, never thrown.
SuiteReport run_suite(const SuiteConfig& config);

/// Optional inputs of a single named check.
struct CheckArgs {
  std::optional<StateLabel> state;
  std::optional<Vec3> x;
  std::optional<double> t;
  std::optional<int> l;
  std::optional<double> a;
  std::optional<double> b;
};

struct IdentityInfo {
  std::string name;
  std::string summary;
};

const std::vector<IdentityInfo>& registered_identities();

/// Runs one identity with verbose intermediate values in its details.
/// Throws Error(unknown_identity) listing the registered names.
CheckReport run_identity(const std::string& name, const SuiteConfig& config,
                         const CheckArgs& args);

/// Seeded generator with a platform-independent uniform mapping.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t stream);
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qho
