#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/field.hpp"
#include "hypercomplex/report.hpp"

namespace hypercomplex {

namespace detail {
struct CliffordData;
}

class CliffordElement;

/// Generalized Clifford algebra on generators e_1..e_r with
/// e_i e_j = w e_j e_i for i < j and e_i^n = w^{mu_i}, w a primitive n-th
/// root of unity. Monomials e_1^{k_1}...e_r^{k_r} with 0 <= k_i < n are
/// numbered by sum k_i n^{i-1}.
class CliffordAlgebra {
 public:
  /// Basis size cap, n^r <= max_dim.
  static constexpr std::size_t max_dim = 1U << 16U;

  [[nodiscard]] const Field& field() const noexcept;
  [[nodiscard]] std::uint32_t order() const noexcept;
  [[nodiscard]] std::uint32_t generators() const noexcept;
  [[nodiscard]] const std::vector<std::uint32_t>& mu() const noexcept;
  [[nodiscard]] const Scalar& omega() const noexcept;
  [[nodiscard]] std::size_t dim() const noexcept;
  /// "Cl^3_2(Cyc3; 0,0)", or "Cl(1,1; Q)" for the n = 2 family.
  [[nodiscard]] std::string name() const;

  [[nodiscard]] std::vector<std::uint32_t> exponents(std::size_t monomial) const;
  [[nodiscard]] std::size_t monomial_index(const std::vector<std::uint32_t>& exponents) const;
  /// "1", "e1", "e1^2*e2".
  [[nodiscard]] std::string monomial_name(std::size_t monomial) const;
  /// product of two monomials as (monomial, coefficient).
  [[nodiscard]] std::pair<std::size_t, Scalar> monomial_product(std::size_t a, std::size_t b) const;

  [[nodiscard]] CliffordElement zero() const;
  [[nodiscard]] CliffordElement one() const;
  [[nodiscard]] CliffordElement generator(std::uint32_t i) const;
  [[nodiscard]] CliffordElement monomial(std::size_t index, const Scalar& coefficient) const;
  [[nodiscard]] CliffordElement scalar(const Scalar& value) const;
  /// Element literal over the generators, e.g. `1 + e1 - 2*e1^2*e2`; products
  /// of symbols are multiplied in written order.
  [[nodiscard]] CliffordElement parse(std::string_view text) const;

  friend bool operator==(const CliffordAlgebra& a, const CliffordAlgebra& b) noexcept;

 private:
  friend CliffordAlgebra make_clifford(const Field&, std::uint32_t, std::uint32_t, std::vector<std::uint32_t>);
  explicit CliffordAlgebra(std::shared_ptr<const detail::CliffordData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::CliffordData> data_;
};

/// Sparse coefficients over monomials; zero coefficients are never stored.
class CliffordElement {
 public:
  using Terms = std::map<std::size_t, Scalar>;

  CliffordElement(CliffordAlgebra algebra, Terms terms);

  [[nodiscard]] const CliffordAlgebra& algebra() const noexcept { return algebra_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] Scalar coefficient(std::size_t monomial) const;
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  CliffordElement& operator+=(const CliffordElement& rhs);
  CliffordElement& operator-=(const CliffordElement& rhs);
  CliffordElement& operator*=(const Scalar& s);
  [[nodiscard]] CliffordElement operator-() const;

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const Scalar& s, CliffordElement a) { return a *= s; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);

  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(std::size_t monomial, const Scalar& value);
  void require_same_algebra(const CliffordElement& other) const;

  CliffordAlgebra algebra_;
  Terms terms_;
};

/// Throws FieldMismatch when the field has no primitive n-th root of unity,
/// InvalidSignature for n < 2, a mu list of the wrong length or entries
/// >= n, and dimensions beyond max_dim. Generator relations are re-checked
/// on the constructed algebra (InvariantViolation).
[[nodiscard]] CliffordAlgebra make_clifford(const Field& field, std::uint32_t n, std::uint32_t r,
                                            std::vector<std::uint32_t> mu);

/// n = 2 with e_1..e_p squaring to 1 and the remaining q generators to -1.
[[nodiscard]] CliffordAlgebra make_clpq(const Field& field, std::uint32_t p, std::uint32_t q);

/// Parses "Cl(p,q)".
[[nodiscard]] CliffordAlgebra parse_clpq(const Field& field, std::string_view text);

[[nodiscard]] CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y);

/// Power and swap relations of the generators, each checked through the
/// product. Returns the failing relation or an empty string.
[[nodiscard]] std::string check_generator_relations(const CliffordAlgebra& algebra);

/// Certifies that e_i -> images[i] extends to an algebra isomorphism onto the
/// target: the images satisfy the power and swap relations, the monomial
/// images are linearly independent, and every product of two monomial images
/// matches the Clifford table. Throws DimensionMismatch, FieldMismatch,
/// NotHomomorphic (naming the relation) or NotInjective.
[[nodiscard]] IdentityReport verify_isomorphism(const CliffordAlgebra& cl, const CdAlgebra& cd,
                                                const std::vector<CdElement>& images);

}  // namespace hypercomplex
