#include "torkit/error.hpp"

namespace torkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::NegativePowerOfPolynomial: return "NegativePowerOfPolynomial";
    case ErrorCode::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorCode::ExponentOffGrid: return "ExponentOffGrid";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::JsonFormat: return "JsonFormat";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotTwoParameterForm: return "NotTwoParameterForm";
    case ErrorCode::AnsatzMismatch: return "AnsatzMismatch";
    case ErrorCode::EvenIndexUnsupported: return "EvenIndexUnsupported";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::UnsupportedConversion: return "UnsupportedConversion";
  }
  return "Unknown";
}

}  // namespace torkit
