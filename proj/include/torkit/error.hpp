#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torkit {

enum class ErrorCode {
  ContextMismatch,
  InvalidContext,
  MissingAssignment,
  NegativePowerOfPolynomial,
  NonIntegralExponent,
  ExponentOffGrid,
  ZeroBase,
  NotAPerfectSquare,
  SyntaxError,
  UnknownVariable,
  JsonFormat,
  InvalidArgument,
  NotInvertible,
  NotTwoParameterForm,
  AnsatzMismatch,
  EvenIndexUnsupported,
  UnknownFamily,
  UnsupportedConversion,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. `position` is set for parse errors
/// (byte offset into the input).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace torkit
