#include "hypercomplex/error.hpp"

namespace hypercomplex {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::invalid_field: return "InvalidField";
    case ErrorCode::invalid_signature: return "InvalidSignature";
    case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::invariant_violation: return "InvariantViolation";
    case ErrorCode::hypothesis_not_met: return "HypothesisNotMet";
    case ErrorCode::excluded_case: return "ExcludedCase";
    case ErrorCode::not_similar: return "NotSimilar";
    case ErrorCode::degenerate_witness: return "DegenerateWitness";
    case ErrorCode::isotropic_witness: return "IsotropicWitness";
    case ErrorCode::not_homomorphic: return "NotHomomorphic";
    case ErrorCode::not_injective: return "NotInjective";
    case ErrorCode::search_failed: return "SearchFailed";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorCode::parse_error, "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace hypercomplex
