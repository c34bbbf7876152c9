#include "qho/error.hpp"

namespace qho {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::degree_too_large: return "DegreeTooLarge";
    case ErrorCode::zero_energy: return "ZeroEnergy";
    case ErrorCode::off_manifold: return "OffManifold";
    case ErrorCode::stencil_out_of_domain: return "StencilOutOfDomain";
    case ErrorCode::order_out_of_range: return "OrderOutOfRange";
    case ErrorCode::quadrature_order_too_low: return "QuadratureOrderTooLow";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::config_invalid: return "ConfigInvalid";
    case ErrorCode::unknown_identity: return "UnknownIdentity";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace qho
