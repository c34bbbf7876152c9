#include "qho/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qho {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json_value(const DetailValue& value) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
        }
        return v;
      },
      value);
}

std::string to_display(const DetailValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>) return format_double(v);
        else return v;
      },
      value);
}

ordered_json check_json(const CheckReport& report) {
  ordered_json j;
  j["name"] = report.name;
  j["anchor"] = report.anchor;
  j["measured"] = to_json_value(report.measured);
  j["tolerance"] = to_json_value(report.tolerance);
  j["passed"] = report.passed;
  j["skipped"] = report.skipped;
  ordered_json details = ordered_json::object();
  for (const auto& [key, value] : report.details) details[key] = to_json_value(value);
  j["details"] = std::move(details);
  return j;
}

std::string status_of(const CheckReport& report) {
  if (report.skipped) return "SKIP";
  return report.passed ? "PASS" : "FAIL";
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

CheckReport CheckReport::make(std::string name, std::string anchor, double measured,
                              double tolerance) {
  CheckReport r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.measured = measured;
  r.set_tolerance(tolerance);
  return r;
}

CheckReport CheckReport::skip(std::string name, std::string anchor, std::string reason) {
  CheckReport r = make(std::move(name), std::move(anchor), 0.0, 0.0);
  r.skipped = true;
  r.detail("skip_reason", std::move(reason));
  return r;
}

void CheckReport::set_tolerance(double new_tolerance) {
  tolerance = new_tolerance;
  passed = measured <= tolerance;
}

CheckReport& CheckReport::detail(std::string key, DetailValue value) {
  for (auto& [k, v] : details) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  details.emplace_back(std::move(key), std::move(value));
  return *this;
}

const DetailValue* CheckReport::find_detail(const std::string& key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return &v;
  }
  return nullptr;
}

SuiteSummary SuiteReport::summary() const {
  SuiteSummary s;
  for (const auto& c : checks) {
    ++s.total;
    if (c.skipped) ++s.skipped;
    else if (c.passed) ++s.passed;
    else ++s.failed;
  }
  return s;
}

std::string SuiteReport::to_json() const {
  ordered_json j;
  ordered_json config_json = ordered_json::object();
  for (const auto& [key, value] : config) config_json[key] = to_json_value(value);
  j["config"] = std::move(config_json);
  const auto s = summary();
  j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed},
                  {"skipped", s.skipped}};
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) list.push_back(check_json(c));
  j["checks"] = std::move(list);
  return j.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  std::size_t width = 4;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "check"
      << "  status  " << std::setw(24) << "measured" << "tolerance\n";
  for (const auto& c : checks) {
    out << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
        << std::setw(6) << status_of(c) << "  " << std::setw(24) << format_double(c.measured)
        << format_double(c.tolerance) << "\n";
  }
  const auto s = summary();
  out << "\n" << s.total << " checks: " << s.passed << " passed, " << s.failed
      << " failed, " << s.skipped << " skipped\n";
  return out.str();
}

std::string to_json(const CheckReport& report) { return check_json(report).dump(2) + "\n"; }

std::string to_text(const CheckReport& report, bool verbose) {
  std::ostringstream out;
  out << "[" << status_of(report) << "] " << report.name << "\n"
      << "  identity:  " << report.anchor << "\n"
      << "  measured:  " << format_double(report.measured) << "\n"
      << "  tolerance: " << format_double(report.tolerance) << "\n";
  if (verbose) {
    for (const auto& [key, value] : report.details) {
      out << "  " << key << " = " << to_display(value) << "\n";
    }
  }
  return out.str();
}

}  // namespace qho
