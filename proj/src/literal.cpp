#include "hypercomplex/literal.hpp"

#include <cctype>
#include <limits>

#include "hypercomplex/error.hpp"

namespace hypercomplex {

namespace {

class Parser {
 public:
  Parser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  std::vector<LiteralTerm> parse_all() {
    auto terms = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  [[nodiscard]] char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == 'w' || c == 'e' || c == '(';
  }

  std::vector<LiteralTerm> parse_sum() {
    std::vector<LiteralTerm> terms;
    bool negative = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      ++pos_;
    }
    while (true) {
      LiteralTerm term = parse_term();
      if (negative) term.coefficient = -term.coefficient;
      terms.push_back(std::move(term));
      c = peek();
      if (c != '+' && c != '-') break;
      negative = c == '-';
      ++pos_;
    }
    return terms;
  }

  LiteralTerm parse_term() {
    LiteralTerm term{field_.one(), {}};
    if (!starts_factor(peek())) {
      if (pos_ >= text_.size()) fail("unexpected end of input");
      fail("expected a number, 'w', 'e<k>' or '('");
    }
    while (true) {
      parse_factor(term);
      char c = peek();
      if (c == '*') {
        ++pos_;
        if (!starts_factor(peek())) fail("expected a factor after '*'");
        continue;
      }
      if (starts_factor(c)) continue;
      break;
    }
    return term;
  }

  mpz_class parse_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t parse_small(const char* what) {
    const std::size_t start = pos_;
    const mpz_class v = parse_integer();
    if (v > std::numeric_limits<std::uint32_t>::max()) {
      pos_ = start;
      fail(std::string(what) + " out of range");
    }
    return static_cast<std::uint32_t>(v.get_ui());
  }

  // Exponent after '^' without intervening whitespace, default 1.
  std::uint32_t parse_optional_exponent() {
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return parse_small("exponent");
    }
    return 1;
  }

  void parse_factor(LiteralTerm& term) {
    const char c = peek();
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      mpq_class value(parse_integer());
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        const mpz_class den = parse_integer();
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        value = mpq_class(value.get_num(), den);
        value.canonicalize();
      }
      try {
        term.coefficient *= field_.from_rational(value);
      } catch (const Error&) {
        pos_ = start;
        fail("denominator vanishes in " + field_.name());
      }
      return;
    }
    if (c == 'w') {
      if (field_.kind() != FieldKind::cyclotomic) fail("'w' is only available in cyclotomic fields");
      ++pos_;
      const std::uint32_t k = parse_optional_exponent();
      term.coefficient *= primitive_root(field_).pow(k);
      return;
    }
    if (c == 'e') {
      ++pos_;
      if (pos_ >= text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
        fail("expected a basis index after 'e'");
      }
      BasisFactor factor;
      factor.position = start;
      factor.index = parse_small("basis index");
      factor.exponent = parse_optional_exponent();
      term.basis.push_back(factor);
      return;
    }
    if (c == '(') {
      ++pos_;
      const auto inner = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      Scalar sum = field_.zero();
      for (const auto& t : inner) {
        if (!t.basis.empty()) {
          pos_ = t.basis.front().position;
          fail("parenthesized sub-expressions must be scalar");
        }
        sum += t.coefficient;
      }
      term.coefficient *= sum;
      return;
    }
    fail("unexpected character");
  }

  Field field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool has_inner_sign(const std::string& s) {
  return s.find_first_of("+-", 1) != std::string::npos;
}

}  // namespace

std::vector<LiteralTerm> parse_linear_combination(const Field& field, std::string_view text) {
  return Parser(field, text).parse_all();
}

Scalar parse_scalar(const Field& field, std::string_view text) {
  Scalar sum = field.zero();
  for (const auto& term : parse_linear_combination(field, text)) {
    if (!term.basis.empty()) throw ParseError(term.basis.front().position, "expected a scalar");
    sum += term.coefficient;
  }
  return sum;
}

std::vector<Scalar> parse_scalar_list(const Field& field, std::string_view text) {
  std::vector<Scalar> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      out.push_back(parse_scalar(field, item));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "in list item '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SignedTerm format_term(const Scalar& coefficient, const std::string& symbol) {
  std::string text = coefficient.to_string();
  SignedTerm out;
  if (text.front() == '-' && !has_inner_sign(text)) {
    out.negative = true;
    text.erase(0, 1);
  }
  if (symbol.empty()) {
    out.body = text;
  } else if (text == "1") {
    out.body = symbol;
  } else if (has_inner_sign(text) || (text.front() == '-')) {
    out.body = "(" + text + ")*" + symbol;
  } else {
    out.body = text + "*" + symbol;
  }
  return out;
}

std::string join_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) out += '-';
    } else {
      out += terms[i].negative ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

}  // namespace hypercomplex
