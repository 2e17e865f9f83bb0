#ifndef DIAGCAT_ERROR_HPP
#define DIAGCAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace diagcat {

enum class ErrorCode {
  not_a_matching,
  not_a_partition,
  not_an_injection,
  color_violation,
  parity_violation,
  invalid_orientation,
  not_planar,
  shape_mismatch,
  color_mismatch,
  variant_mismatch,
  unsupported_variant,
  dimension_budget_exceeded,
  size_mismatch,
  syntax_error,
  invalid_argument,
};

/// Stable machine-readable name, e.g. "NotAMatching".
std::string_view error_code_name(ErrorCode code);

/// Domain error raised by every library operation.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse failure with the byte offset at which the parser gave up.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& expected, const std::string& text)
      : Error(ErrorCode::syntax_error,
              "syntax error at position " + std::to_string(position) + ": expected " + expected + " in '" + text + "'"),
        position_(position), expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

} // namespace diagcat

#endif // DIAGCAT_ERROR_HPP
