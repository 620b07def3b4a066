#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercomplex {

enum class ErrorCode {
  division_by_zero,
  field_mismatch,
  invalid_field,
  invalid_signature,
  algebra_mismatch,
  dimension_mismatch,
  invariant_violation,
  hypothesis_not_met,
  excluded_case,
  not_similar,
  degenerate_witness,
  isotropic_witness,
  not_homomorphic,
  not_injective,
  search_failed,
  parse_error,
};

/// Stable name of an error code, e.g. "DivisionByZero".
std::string_view error_code_name(ErrorCode code) noexcept;

/// All failures in the library are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Literal parse failure with the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hypercomplex
