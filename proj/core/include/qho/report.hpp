#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qho {

using DetailValue = std::variant<bool, std::int64_t, double, std::string>;

/// Outcome of one identity check. passed is always measured <= tolerance;
/// failures are data, never exceptions.
struct CheckReport {
  std::string name;
  /// The identity being checked, written out as a formula.
  std::string anchor;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool skipped = false;
  std::vector<std::pair<std::string, DetailValue>> details;

  static CheckReport make(std::string name, std::string anchor, double measured,
                          double tolerance);
  static CheckReport skip(std::string name, std::string anchor, std::string reason);

  /// Recomputes passed from measured and tolerance (NaN never passes).
  void set_tolerance(double new_tolerance);

  CheckReport& detail(std::string key, DetailValue value);
  const DetailValue* find_detail(const std::string& key) const;
};

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

/// Ordered key/value snapshot of the configuration that produced a suite.
using ConfigSnapshot = std::vector<std::pair<std::string, DetailValue>>;

struct SuiteReport {
  std::vector<CheckReport> checks;
  ConfigSnapshot config;

  SuiteSummary summary() const;
  bool all_passed() const { return summary().failed == 0; }

  std::string to_json() const;
  std::string to_text() const;
};

std::string to_json(const CheckReport& report);
std::string to_text(const CheckReport& report, bool verbose);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

}  // namespace qho
