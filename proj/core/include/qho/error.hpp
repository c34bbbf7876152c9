#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qho {

enum class ErrorCode {
  degree_too_large,
  zero_energy,
  off_manifold,
  stencil_out_of_domain,
  order_out_of_range,
  quadrature_order_too_low,
  domain_error,
  config_invalid,
  unknown_identity,
  io_error,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure
/// class so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qho
