#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypercomplex/field.hpp"

namespace hypercomplex {

/// One `e<index>[^exponent]` symbol inside a term.
struct BasisFactor {
  std::uint32_t index = 0;
  std::uint32_t exponent = 1;
  std::size_t position = 0;  // byte offset in the source text
};

/// coefficient * (product of basis factors, in written order).
struct LiteralTerm {
  Scalar coefficient;
  std::vector<BasisFactor> basis;
};

/// Parses a sum of terms such as `1 - 3/4*e2 + (1+w)*e3` or `2*e1^2*e2`.
///
/// Grammar: terms joined by `+`/`-`; a term is a product of factors joined by
/// `*` or juxtaposition; a factor is an integer, `p/q`, `w[^k]` (cyclotomic
/// fields only), `e<k>[^m]`, or a parenthesized scalar sum. Throws ParseError
/// carrying the offending offset.
[[nodiscard]] std::vector<LiteralTerm> parse_linear_combination(const Field& field, std::string_view text);

/// Like parse_linear_combination but rejects basis symbols.
[[nodiscard]] Scalar parse_scalar(const Field& field, std::string_view text);

/// Comma-separated scalars, e.g. a gamma list "-1,2,w".
[[nodiscard]] std::vector<Scalar> parse_scalar_list(const Field& field, std::string_view text);

/// Formats `coefficient * symbol` as one signed term of a sum. Returns the
/// sign separately so callers can join with " + " / " - ". An empty symbol
/// denotes the unit.
struct SignedTerm {
  bool negative = false;
  std::string body;
};
[[nodiscard]] SignedTerm format_term(const Scalar& coefficient, const std::string& symbol);

/// Joins signed terms as `t0 + t1 - t2`; "0" when empty.
[[nodiscard]] std::string join_terms(const std::vector<SignedTerm>& terms);

}  // namespace hypercomplex
