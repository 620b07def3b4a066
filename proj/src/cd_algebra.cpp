#include "hypercomplex/cd_algebra.hpp"

#include <mutex>
#include <ostream>

#include "hypercomplex/error.hpp"
#include "hypercomplex/literal.hpp"

namespace hypercomplex {

namespace detail {

struct CdAlgebraData {
  explicit CdAlgebraData(Field f) : field(f) {}

  Field field;
  std::vector<Scalar> gammas;
  std::size_t dim;
  std::vector<Scalar> squares;
  mutable std::once_flag table_once;
  mutable std::unique_ptr<StructureTable> table;
};

}  // namespace detail

namespace {

using Coeffs = std::vector<Scalar>;

bool all_zero(std::span<const Scalar> v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Coeffs conj_coeffs(std::span<const Scalar> v) {
  Coeffs out(v.begin(), v.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

Coeffs cd_product(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> gammas,
                  const Field& field) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  const Scalar& gamma = gammas.back();
  const auto lower = gammas.first(gammas.size() - 1);
  const auto a1 = x.first(h);
  const auto a2 = x.subspan(h);
  const auto b1 = y.first(h);
  const auto b2 = y.subspan(h);
  const bool a1z = all_zero(a1);
  const bool a2z = all_zero(a2);
  const bool b1z = all_zero(b1);
  const bool b2z = all_zero(b2);

  Coeffs out(x.size(), field.zero());
  auto accumulate = [&](std::size_t offset, const Coeffs& part, const Scalar* factor) {
    for (std::size_t i = 0; i < h; ++i) {
      if (factor != nullptr) {
        out[offset + i].add_product(*factor, part[i]);
      } else {
        out[offset + i] += part[i];
      }
    }
  };
  if (!a1z && !b1z) accumulate(0, cd_product(a1, b1, lower, field), nullptr);
  if (!a2z && !b2z) accumulate(0, cd_product(conj_coeffs(b2), a2, lower, field), &gamma);
  if (!a2z && !b1z) accumulate(h, cd_product(a2, conj_coeffs(b1), lower, field), nullptr);
  if (!a1z && !b2z) accumulate(h, cd_product(b2, a1, lower, field), nullptr);
  return out;
}

// Sign of conj on basis element j: +1 for e_0, -1 otherwise.
Scalar conj_sign(std::size_t j, const Field& field) { return j == 0 ? field.one() : -field.one(); }

}  // namespace

// ---------------------------------------------------------------------------
// StructureTable

StructureTable::StructureTable(std::size_t dim, std::vector<TableEntry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorCode::dimension_mismatch, "structure table needs dim^2 entries");
  }
}

StructureTable build_structure_table(const CdAlgebra& algebra) {
  const Field& field = algebra.field();
  std::vector<TableEntry> current{TableEntry{0, field.one()}};
  std::size_t h = 1;
  for (const Scalar& gamma : algebra.gammas()) {
    const std::size_t d = 2 * h;
    std::vector<TableEntry> next;
    next.reserve(d * d);
    auto prev = [&](std::size_t i, std::size_t j) -> const TableEntry& { return current[i * h + j]; };
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (i < h && j < h) {
          // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
          next.push_back(prev(i, j));
        } else if (i < h) {
          // (e_i, 0)(0, e_j') = (0, e_j' e_i)
          const auto& e = prev(j - h, i);
          next.push_back(TableEntry{static_cast<std::uint32_t>(e.k + h), e.beta});
        } else if (j < h) {
          // (0, e_i')(e_j, 0) = (0, e_i' conj(e_j))
          const auto& e = prev(i - h, j);
          next.push_back(TableEntry{static_cast<std::uint32_t>(e.k + h), conj_sign(j, field) * e.beta});
        } else {
          // (0, e_i')(0, e_j') = (gamma conj(e_j') e_i', 0)
          const auto& e = prev(j - h, i - h);
          next.push_back(TableEntry{e.k, gamma * conj_sign(j - h, field) * e.beta});
        }
      }
    }
    current = std::move(next);
    h = d;
  }
  return StructureTable(h, std::move(current));
}

// ---------------------------------------------------------------------------
// CdAlgebra

CdAlgebra CdAlgebra::make(const Field& field, std::vector<Scalar> gammas) {
  if (gammas.size() > max_levels) {
    throw Error(ErrorCode::invalid_signature,
                "at most " + std::to_string(max_levels) + " doublings are supported, got " +
                    std::to_string(gammas.size()));
  }
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i].field() != field) {
      throw Error(ErrorCode::field_mismatch, "gamma_" + std::to_string(i + 1) + " is not in " + field.name());
    }
    if (gammas[i].is_zero()) {
      throw Error(ErrorCode::invalid_signature, "gamma_" + std::to_string(i + 1) + " must be nonzero");
    }
  }
  auto data = std::make_shared<detail::CdAlgebraData>(field);
  data->dim = std::size_t{1} << gammas.size();
  // e_m^2 for m in the upper half of (A, gamma): (0, e')^2 = gamma conj(e') e'.
  data->squares = {field.one()};
  for (const Scalar& gamma : gammas) {
    const std::size_t h = data->squares.size();
    data->squares.reserve(2 * h);
    data->squares.push_back(gamma);
    for (std::size_t m = 1; m < h; ++m) data->squares.push_back(-(gamma * data->squares[m]));
  }
  data->gammas = std::move(gammas);
  return CdAlgebra(std::move(data));
}

const Field& CdAlgebra::field() const noexcept { return data_->field; }
std::span<const Scalar> CdAlgebra::gammas() const noexcept { return data_->gammas; }
unsigned CdAlgebra::levels() const noexcept { return static_cast<unsigned>(data_->gammas.size()); }
std::size_t CdAlgebra::dim() const noexcept { return data_->dim; }
const Scalar& CdAlgebra::basis_square(std::size_t i) const { return data_->squares.at(i); }
std::span<const Scalar> CdAlgebra::basis_squares() const noexcept { return data_->squares; }

const StructureTable& CdAlgebra::table() const {
  std::call_once(data_->table_once,
                 [this] { data_->table = std::make_unique<StructureTable>(build_structure_table(*this)); });
  return *data_->table;
}

MulBackend CdAlgebra::default_backend() const noexcept {
  return dim() >= 8 ? MulBackend::table : MulBackend::recursive;
}

std::string CdAlgebra::signature() const {
  std::string out = "CD(" + field().name();
  for (std::size_t i = 0; i < data_->gammas.size(); ++i) {
    out += i == 0 ? "; " : ",";
    out += data_->gammas[i].to_string();
  }
  return out + ")";
}

CdElement CdAlgebra::zero() const { return CdElement(*this, Coeffs(dim(), field().zero())); }

CdElement CdAlgebra::one() const { return basis(0); }

CdElement CdAlgebra::basis(std::size_t index) const {
  if (index >= dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "basis index " + std::to_string(index) + " out of range for dimension " + std::to_string(dim()));
  }
  Coeffs c(dim(), field().zero());
  c[index] = field().one();
  return CdElement(*this, std::move(c));
}

CdElement CdAlgebra::scalar(const Scalar& value) const {
  Coeffs c(dim(), field().zero());
  c[0] = value;
  return CdElement(*this, std::move(c));
}

CdElement CdAlgebra::element(std::vector<Scalar> coefficients) const {
  return CdElement(*this, std::move(coefficients));
}

CdElement CdAlgebra::parse(std::string_view text) const {
  CdElement sum = zero();
  for (const auto& term : parse_linear_combination(field(), text)) {
    CdElement value = scalar(term.coefficient);
    for (const auto& factor : term.basis) {
      if (factor.index >= dim()) {
        throw ParseError(factor.position, "basis symbol e" + std::to_string(factor.index) +
                                              " out of range for dimension " + std::to_string(dim()));
      }
      const CdElement e = basis(factor.index);
      for (std::uint32_t p = 0; p < factor.exponent; ++p) value = value * e;
    }
    sum += value;
  }
  return sum;
}

bool operator==(const CdAlgebra& a, const CdAlgebra& b) noexcept {
  if (a.data_ == b.data_) return true;
  if (a.field() != b.field() || a.levels() != b.levels()) return false;
  for (std::size_t i = 0; i < a.levels(); ++i) {
    if (!(a.data_->gammas[i] == b.data_->gammas[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// CdElement

CdElement::CdElement(CdAlgebra algebra, std::vector<Scalar> coefficients)
    : algebra_(std::move(algebra)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != algebra_.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "expected " + std::to_string(algebra_.dim()) +
                                                   " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (const auto& c : coeffs_) {
    if (c.field() != algebra_.field()) throw Error(ErrorCode::field_mismatch, "coefficient from another field");
  }
}

void CdElement::require_same_algebra(const CdElement& other) const {
  if (!(algebra_ == other.algebra_)) {
    throw Error(ErrorCode::algebra_mismatch, algebra_.signature() + " vs " + other.algebra_.signature());
  }
}

bool CdElement::is_zero() const { return all_zero(coeffs_); }

bool CdElement::is_scalar() const { return all_zero(std::span<const Scalar>(coeffs_).subspan(1)); }

CdElement& CdElement::operator+=(const CdElement& rhs) {
  require_same_algebra(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CdElement& CdElement::operator-=(const CdElement& rhs) {
  require_same_algebra(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CdElement& CdElement::operator*=(const Scalar& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CdElement CdElement::operator-() const {
  CdElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CdElement operator*(const CdElement& a, const CdElement& b) {
  return multiply(a, b, a.algebra().default_backend());
}

bool operator==(const CdElement& a, const CdElement& b) {
  a.require_same_algebra(b);
  return a.coeffs_ == b.coeffs_;
}

std::string CdElement::to_string() const {
  std::vector<SignedTerm> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    terms.push_back(format_term(coeffs_[i], i == 0 ? std::string() : "e" + std::to_string(i)));
  }
  return join_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const CdElement& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Operations

CdElement mul_recursive(const CdElement& x, const CdElement& y) {
  if (!(x.algebra() == y.algebra())) {
    throw Error(ErrorCode::algebra_mismatch, x.algebra().signature() + " vs " + y.algebra().signature());
  }
  const CdAlgebra& alg = x.algebra();
  return alg.element(cd_product(x.coefficients(), y.coefficients(), alg.gammas(), alg.field()));
}

CdElement mul_table(const CdElement& x, const CdElement& y) {
  if (!(x.algebra() == y.algebra())) {
    throw Error(ErrorCode::algebra_mismatch, x.algebra().signature() + " vs " + y.algebra().signature());
  }
  const CdAlgebra& alg = x.algebra();
  const StructureTable& table = alg.table();
  const std::size_t d = alg.dim();
  std::vector<std::size_t> ys;
  for (std::size_t j = 0; j < d; ++j) {
    if (!y[j].is_zero()) ys.push_back(j);
  }
  Coeffs out(d, alg.field().zero());
  Scalar tmp = alg.field().zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (const std::size_t j : ys) {
      const TableEntry& e = table(i, j);
      tmp = x[i];
      tmp *= y[j];
      out[e.k].add_product(e.beta, tmp);
    }
  }
  return alg.element(std::move(out));
}

CdElement multiply(const CdElement& x, const CdElement& y, MulBackend backend) {
  return backend == MulBackend::table ? mul_table(x, y) : mul_recursive(x, y);
}

CdElement conj(const CdElement& x) {
  return x.algebra().element(conj_coeffs(x.coefficients()));
}

Scalar trace(const CdElement& x) {
  const CdElement s = x + conj(x);
  if (!s.is_scalar()) throw Error(ErrorCode::invariant_violation, "x + conj(x) is not a scalar for x = " + x.to_string());
  return s[0];
}

Scalar norm(const CdElement& x) {
  const CdElement p = x * conj(x);
  if (!p.is_scalar()) throw Error(ErrorCode::invariant_violation, "x conj(x) is not a scalar for x = " + x.to_string());
  return p[0];
}

Scalar t_form(const CdElement& a, const CdElement& b) {
  if (!(a.algebra() == b.algebra())) {
    throw Error(ErrorCode::algebra_mismatch, a.algebra().signature() + " vs " + b.algebra().signature());
  }
  const auto squares = a.algebra().basis_squares();
  Scalar sum = a.algebra().field().zero();
  for (std::size_t m = 0; m < a.dim(); ++m) {
    if (a[m].is_zero() || b[m].is_zero()) continue;
    sum.add_product(squares[m], a[m] * b[m]);
  }
  return sum;
}

CdElement vector_part(const CdElement& x) {
  Coeffs c(x.coefficients().begin(), x.coefficients().end());
  c[0] = x.algebra().field().zero();
  return x.algebra().element(std::move(c));
}

const Scalar& scalar_part(const CdElement& x) { return x[0]; }

CdElement commutator(const CdElement& x, const CdElement& y) { return x * y - y * x; }

CdElement associator(const CdElement& x, const CdElement& y, const CdElement& z) {
  return (x * y) * z - x * (y * z);
}

}  // namespace hypercomplex
