#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypercomplex/field.hpp"

namespace hypercomplex {

/// e_i e_j = beta * e_k
struct TableEntry {
  std::uint32_t k;
  Scalar beta;
};

/// Multiplication table of a basis in which every product of two basis
/// elements is a nonzero multiple of a single basis element.
class StructureTable {
 public:
  StructureTable(std::size_t dim, std::vector<TableEntry> entries);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const TableEntry& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

 private:
  std::size_t dim_;
  std::vector<TableEntry> entries_;
};

enum class MulBackend { recursive, table };

namespace detail {
struct CdAlgebraData;
}

class CdElement;

/// The algebra A_t obtained from K by t doublings with parameters
/// gamma_1..gamma_t. Basis index i of (A, gamma) is basis i of A paired with 0
/// when i < dim/2, and 0 paired with basis i - dim/2 of A otherwise.
///
/// Cheap to copy; all copies share one immutable descriptor and one lazily
/// built structure table.
class CdAlgebra {
 public:
  static constexpr unsigned max_levels = 10;

  /// Throws InvalidSignature for a zero gamma or more than max_levels
  /// doublings, FieldMismatch for a gamma from another field.
  static CdAlgebra make(const Field& field, std::vector<Scalar> gammas);

  [[nodiscard]] const Field& field() const noexcept;
  [[nodiscard]] std::span<const Scalar> gammas() const noexcept;
  [[nodiscard]] unsigned levels() const noexcept;
  [[nodiscard]] std::size_t dim() const noexcept;
  /// e_i^2 as a scalar (e_0^2 = 1).
  [[nodiscard]] const Scalar& basis_square(std::size_t i) const;
  [[nodiscard]] std::span<const Scalar> basis_squares() const noexcept;
  /// Built on first use, thread-safe.
  [[nodiscard]] const StructureTable& table() const;
  /// The table backend for dim >= 8, recursion below that.
  [[nodiscard]] MulBackend default_backend() const noexcept;
  /// "CD(Q; -1,-1)"
  [[nodiscard]] std::string signature() const;

  [[nodiscard]] CdElement zero() const;
  [[nodiscard]] CdElement one() const;
  [[nodiscard]] CdElement basis(std::size_t index) const;
  [[nodiscard]] CdElement scalar(const Scalar& value) const;
  [[nodiscard]] CdElement element(std::vector<Scalar> coefficients) const;
  /// Element literal such as `1 - 2*e1 + 1/2*e3`; products of basis symbols
  /// are evaluated left to right.
  [[nodiscard]] CdElement parse(std::string_view text) const;

  /// Same field and same gamma list.
  friend bool operator==(const CdAlgebra& a, const CdAlgebra& b) noexcept;

 private:
  explicit CdAlgebra(std::shared_ptr<const detail::CdAlgebraData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::CdAlgebraData> data_;
};

/// Coefficient vector over the basis e_0 = 1, e_1, ..., e_{dim-1}.
class CdElement {
 public:
  CdElement(CdAlgebra algebra, std::vector<Scalar> coefficients);

  [[nodiscard]] const CdAlgebra& algebra() const noexcept { return algebra_; }
  [[nodiscard]] std::size_t dim() const noexcept { return coeffs_.size(); }
  [[nodiscard]] std::span<const Scalar> coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

  [[nodiscard]] bool is_zero() const;
  /// True when every coefficient except e_0 vanishes.
  [[nodiscard]] bool is_scalar() const;

  CdElement& operator+=(const CdElement& rhs);
  CdElement& operator-=(const CdElement& rhs);
  CdElement& operator*=(const Scalar& rhs);

  [[nodiscard]] CdElement operator-() const;
  friend CdElement operator+(CdElement a, const CdElement& b) { return a += b; }
  friend CdElement operator-(CdElement a, const CdElement& b) { return a -= b; }
  friend CdElement operator*(CdElement a, const Scalar& s) { return a *= s; }
  friend CdElement operator*(const Scalar& s, CdElement a) { return a *= s; }
  /// Product with the algebra's default backend.
  friend CdElement operator*(const CdElement& a, const CdElement& b);
  friend bool operator==(const CdElement& a, const CdElement& b);

  /// Canonical text `c0 + c1*e1 - ...` with zero terms omitted; "0" for zero.
  [[nodiscard]] std::string to_string() const;

 private:
  void require_same_algebra(const CdElement& other) const;

  CdAlgebra algebra_;
  std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CdElement& x);

/// Product by structural recursion on the doubling formula
/// (a1, a2)(b1, b2) = (a1 b1 + gamma conj(b2) a2, a2 conj(b1) + b2 a1).
[[nodiscard]] CdElement mul_recursive(const CdElement& x, const CdElement& y);
/// Bilinear expansion through the structure table.
[[nodiscard]] CdElement mul_table(const CdElement& x, const CdElement& y);
[[nodiscard]] CdElement multiply(const CdElement& x, const CdElement& y, MulBackend backend);

/// Derives the table with the doubling rule applied to basis elements.
[[nodiscard]] StructureTable build_structure_table(const CdAlgebra& algebra);

[[nodiscard]] CdElement conj(const CdElement& x);
/// x + conj(x); throws InvariantViolation should the sum leave K.
[[nodiscard]] Scalar trace(const CdElement& x);
/// x conj(x); throws InvariantViolation should the product leave K.
[[nodiscard]] Scalar norm(const CdElement& x);
/// T(a, b) = sum over m >= 0 of e_m^2 a_m b_m.
[[nodiscard]] Scalar t_form(const CdElement& a, const CdElement& b);
[[nodiscard]] CdElement vector_part(const CdElement& x);
[[nodiscard]] const Scalar& scalar_part(const CdElement& x);

[[nodiscard]] CdElement commutator(const CdElement& x, const CdElement& y);
/// (xy)z - x(yz)
[[nodiscard]] CdElement associator(const CdElement& x, const CdElement& y, const CdElement& z);

}  // namespace hypercomplex
