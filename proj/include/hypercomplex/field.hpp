#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hypercomplex {

enum class FieldKind { rationals, prime_field, cyclotomic };

/// Names one of the supported coefficient fields. `parameter` is p for
/// prime fields, n for the n-th cyclotomic field, and unused (0) for Q.
struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t parameter = 0;

  auto operator<=>(const FieldDescriptor&) const = default;
};

namespace detail {
struct FieldData;
}

class Scalar;

/// Handle to an interned, immutable field context.
///
/// Fields are created once per descriptor and live for the whole process, so
/// handles are cheap to copy and compare by identity. Characteristic 2 is
/// rejected at construction: every algebra in this library needs 1/2.
class Field {
 public:
  static Field rationals();
  /// Throws InvalidField unless p is an odd prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Q(w) with w a primitive n-th root of unity, represented modulo the n-th
  /// cyclotomic polynomial. Throws InvalidField for n < 2 or n > 512.
  static Field cyclotomic(std::uint32_t n);
  static Field from_descriptor(FieldDescriptor descriptor);
  /// Accepts "Q", "F<p>" and "Cyc<n>".
  static Field parse(std::string_view text);

  [[nodiscard]] const FieldDescriptor& descriptor() const noexcept;
  [[nodiscard]] FieldKind kind() const noexcept { return descriptor().kind; }
  /// Canonical text: "Q", "F7", "Cyc3".
  [[nodiscard]] const std::string& name() const noexcept;
  /// 0 for characteristic zero fields.
  [[nodiscard]] std::uint32_t characteristic() const noexcept;
  /// Dimension over the prime field: 1, or phi(n) for cyclotomic(n).
  [[nodiscard]] std::size_t degree() const noexcept;
  /// Coefficients (lowest degree first) of the monic reduction modulus. Empty
  /// unless the field is cyclotomic.
  [[nodiscard]] std::span<const mpz_class> modulus() const noexcept;

  [[nodiscard]] Scalar zero() const;
  [[nodiscard]] Scalar one() const;
  [[nodiscard]] Scalar from_int(long long value) const;
  [[nodiscard]] Scalar from_integer(const mpz_class& value) const;
  /// Throws DivisionByZero when the denominator vanishes in the field.
  [[nodiscard]] Scalar from_rational(const mpq_class& value) const;
  /// Cyclotomic element with the given coefficients on 1, w, w^2, ...
  /// Higher powers are reduced. Throws FieldMismatch on other fields.
  [[nodiscard]] Scalar from_polynomial(std::vector<mpq_class> coefficients) const;

  /// A primitive root of unity of exactly the given order, if the field has one.
  [[nodiscard]] std::optional<Scalar> root_of_unity(std::uint32_t order) const;
  /// Some s with s*s == value, when the search below finds one. Exact for Q
  /// and prime fields; for cyclotomic fields only square roots of the form
  /// (rational) * (root of unity) are detected.
  [[nodiscard]] std::optional<Scalar> sqrt(const Scalar& value) const;

  [[nodiscard]] const detail::FieldData* data() const noexcept { return data_; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  friend class Scalar;

  const detail::FieldData* data_;
};

std::ostream& operator<<(std::ostream& os, const Field& field);

/// Exact element of a Field, always stored in canonical form so that equal
/// values have equal representations.
class Scalar {
 public:
  using Polynomial = std::vector<mpq_class>;

  [[nodiscard]] Field field() const noexcept { return Field(field_); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  /// *this += a * b
  void add_product(const Scalar& a, const Scalar& b);

  [[nodiscard]] Scalar operator-() const;
  /// Throws DivisionByZero for zero.
  [[nodiscard]] Scalar inverse() const;
  /// Negative exponents invert first.
  [[nodiscard]] Scalar pow(long long exponent) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Representation accessors; each throws FieldMismatch on the wrong kind.
  [[nodiscard]] const mpq_class& rational() const;
  [[nodiscard]] std::uint64_t residue() const;
  [[nodiscard]] const Polynomial& polynomial() const;

  /// The value as a rational number when it lies in Q (always for Q, for
  /// constant cyclotomic elements). Empty over prime fields.
  [[nodiscard]] std::optional<mpq_class> as_rational() const;

  /// Canonical text: "5/6", "4", "1+2w-w^2", "1/2*w".
  [[nodiscard]] std::string to_string() const;

 private:
  friend class Field;
  using Repr = std::variant<mpq_class, std::uint64_t, Polynomial>;

  Scalar(const detail::FieldData* field, Repr value) : field_(field), value_(std::move(value)) {}
  void require_same_field(const Scalar& other) const;

  const detail::FieldData* field_;
  Repr value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

/// The generating root of unity w of a cyclotomic field (the class of x).
/// Throws FieldMismatch for other fields.
[[nodiscard]] Scalar primitive_root(const Field& field);

}  // namespace hypercomplex
