#include "diagcat/error.hpp"

namespace diagcat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::not_a_matching: return "NotAMatching";
  case ErrorCode::not_a_partition: return "NotAPartition";
  case ErrorCode::not_an_injection: return "NotAnInjection";
  case ErrorCode::color_violation: return "ColorViolation";
  case ErrorCode::parity_violation: return "ParityViolation";
  case ErrorCode::invalid_orientation: return "InvalidOrientation";
  case ErrorCode::not_planar: return "NotPlanar";
  case ErrorCode::shape_mismatch: return "ShapeMismatch";
  case ErrorCode::color_mismatch: return "ColorMismatch";
  case ErrorCode::variant_mismatch: return "VariantMismatch";
  case ErrorCode::unsupported_variant: return "UnsupportedVariant";
  case ErrorCode::dimension_budget_exceeded: return "DimensionBudgetExceeded";
  case ErrorCode::size_mismatch: return "SizeMismatch";
  case ErrorCode::syntax_error: return "SyntaxError";
  case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace diagcat
