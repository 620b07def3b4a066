#include "hypercomplex/clifford.hpp"

#include <charconv>

#include "hypercomplex/error.hpp"
#include "hypercomplex/linear_algebra.hpp"
#include "hypercomplex/literal.hpp"

namespace hypercomplex {

namespace detail {

struct CliffordData {
  explicit CliffordData(Field f, Scalar w) : field(f), omega(std::move(w)) {}

  Field field;
  Scalar omega;
  std::uint32_t n = 2;
  std::uint32_t r = 0;
  std::vector<std::uint32_t> mu;
  std::vector<Scalar> omega_powers;  // omega^0 .. omega^{n-1}
  std::vector<std::size_t> strides;  // n^{i}
  std::size_t dim = 1;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// CliffordAlgebra

const Field& CliffordAlgebra::field() const noexcept { return data_->field; }
std::uint32_t CliffordAlgebra::order() const noexcept { return data_->n; }
std::uint32_t CliffordAlgebra::generators() const noexcept { return data_->r; }
const std::vector<std::uint32_t>& CliffordAlgebra::mu() const noexcept { return data_->mu; }
const Scalar& CliffordAlgebra::omega() const noexcept { return data_->omega; }
std::size_t CliffordAlgebra::dim() const noexcept { return data_->dim; }

std::string CliffordAlgebra::name() const {
  const auto& d = *data_;
  if (d.n == 2) {
    std::uint32_t p = 0;
    while (p < d.r && d.mu[p] == 0) ++p;
    bool standard = true;
    for (std::uint32_t i = p; i < d.r; ++i) standard = standard && d.mu[i] == 1;
    if (standard) return "Cl(" + std::to_string(p) + "," + std::to_string(d.r - p) + "; " + d.field.name() + ")";
  }
  std::string out = "Cl^" + std::to_string(d.n) + "_" + std::to_string(d.r) + "(" + d.field.name();
  for (std::size_t i = 0; i < d.mu.size(); ++i) out += (i == 0 ? "; " : ",") + std::to_string(d.mu[i]);
  return out + ")";
}

std::vector<std::uint32_t> CliffordAlgebra::exponents(std::size_t monomial) const {
  std::vector<std::uint32_t> out(data_->r);
  for (auto& k : out) {
    k = static_cast<std::uint32_t>(monomial % data_->n);
    monomial /= data_->n;
  }
  return out;
}

std::size_t CliffordAlgebra::monomial_index(const std::vector<std::uint32_t>& exponents) const {
  if (exponents.size() != data_->r) throw Error(ErrorCode::dimension_mismatch, "exponent vector length");
  std::size_t index = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] >= data_->n) throw Error(ErrorCode::dimension_mismatch, "exponent out of range");
    index += exponents[i] * data_->strides[i];
  }
  return index;
}

std::string CliffordAlgebra::monomial_name(std::size_t monomial) const {
  std::string out;
  const auto k = exponents(monomial);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "e" + std::to_string(i + 1);
    if (k[i] > 1) out += "^" + std::to_string(k[i]);
  }
  return out.empty() ? "1" : out;
}

std::pair<std::size_t, Scalar> CliffordAlgebra::monomial_product(std::size_t a, std::size_t b) const {
  const auto& d = *data_;
  const auto ka = exponents(a);
  const auto kb = exponents(b);
  // Moving e_j^{b_j} left past e_i^{a_i} (i > j) costs w^{-a_i b_j}.
  std::uint64_t phase = 0;
  std::uint64_t suffix = 0;  // sum of a_i for i > j
  for (std::size_t j = d.r; j-- > 0;) {
    phase += (d.n - (suffix * kb[j]) % d.n) % d.n;
    suffix += ka[j];
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < d.r; ++i) {
    std::uint32_t k = ka[i] + kb[i];
    if (k >= d.n) {
      k -= d.n;
      phase += d.mu[i];
    }
    index += k * d.strides[i];
  }
  return {index, d.omega_powers[phase % d.n]};
}

CliffordElement CliffordAlgebra::zero() const { return CliffordElement(*this, {}); }
CliffordElement CliffordAlgebra::one() const { return monomial(0, field().one()); }

CliffordElement CliffordAlgebra::generator(std::uint32_t i) const {
  if (i < 1 || i > data_->r) throw Error(ErrorCode::dimension_mismatch, "no generator e" + std::to_string(i));
  return monomial(data_->strides[i - 1], field().one());
}

CliffordElement CliffordAlgebra::monomial(std::size_t index, const Scalar& coefficient) const {
  if (index >= dim()) throw Error(ErrorCode::dimension_mismatch, "monomial index out of range");
  CliffordElement::Terms terms;
  if (!coefficient.is_zero()) terms.emplace(index, coefficient);
  return CliffordElement(*this, std::move(terms));
}

CliffordElement CliffordAlgebra::scalar(const Scalar& value) const { return monomial(0, value); }

CliffordElement CliffordAlgebra::parse(std::string_view text) const {
  CliffordElement sum = zero();
  for (const auto& term : parse_linear_combination(field(), text)) {
    CliffordElement value = scalar(term.coefficient);
    for (const auto& factor : term.basis) {
      if (factor.index < 1 || factor.index > data_->r) {
        throw ParseError(factor.position, "no generator e" + std::to_string(factor.index) + " in " + name());
      }
      const CliffordElement e = generator(factor.index);
      for (std::uint32_t p = 0; p < factor.exponent; ++p) value = value * e;
    }
    sum += value;
  }
  return sum;
}

bool operator==(const CliffordAlgebra& a, const CliffordAlgebra& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.field() == b.field() && a.order() == b.order() && a.mu() == b.mu() && a.omega() == b.omega();
}

CliffordAlgebra make_clifford(const Field& field, std::uint32_t n, std::uint32_t r, std::vector<std::uint32_t> mu) {
  if (n < 2) throw Error(ErrorCode::invalid_signature, "order must be at least 2");
  if (mu.size() != r) {
    throw Error(ErrorCode::invalid_signature,
                "expected " + std::to_string(r) + " exponents, got " + std::to_string(mu.size()));
  }
  for (auto m : mu)
    if (m >= n) throw Error(ErrorCode::invalid_signature, "exponent " + std::to_string(m) + " not below n");
  const auto omega = field.root_of_unity(n);
  if (!omega) throw Error(ErrorCode::field_mismatch, field.name() + " has no primitive root of unity of order " + std::to_string(n));

  auto data = std::make_shared<detail::CliffordData>(field, *omega);
  data->n = n;
  data->r = r;
  data->mu = std::move(mu);
  for (std::uint32_t i = 0; i < r; ++i) {
    data->strides.push_back(data->dim);
    if (data->dim > CliffordAlgebra::max_dim / n) throw Error(ErrorCode::invalid_signature, "n^r exceeds the dimension cap");
    data->dim *= n;
  }
  Scalar power = field.one();
  for (std::uint32_t k = 0; k < n; ++k) {
    data->omega_powers.push_back(power);
    power *= *omega;
  }

  CliffordAlgebra algebra(std::move(data));
  if (auto failed = check_generator_relations(algebra); !failed.empty()) {
    throw Error(ErrorCode::invariant_violation, "generator relation fails: " + failed);
  }
  return algebra;
}

CliffordAlgebra make_clpq(const Field& field, std::uint32_t p, std::uint32_t q) {
  std::vector<std::uint32_t> mu(p, 0);
  mu.resize(p + q, 1);
  return make_clifford(field, 2, p + q, std::move(mu));
}

CliffordAlgebra parse_clpq(const Field& field, std::string_view text) {
  auto number = [&](std::size_t& pos) {
    std::uint32_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError(pos, "expected a generator count");
    pos = static_cast<std::size_t>(end - text.data());
    return value;
  };
  auto expect = [&](std::size_t& pos, std::string_view token) {
    if (text.substr(pos, token.size()) != token) throw ParseError(pos, "expected '" + std::string(token) + "'");
    pos += token.size();
  };
  std::size_t pos = 0;
  expect(pos, "Cl(");
  const std::uint32_t p = number(pos);
  expect(pos, ",");
  const std::uint32_t q = number(pos);
  expect(pos, ")");
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  return make_clpq(field, p, q);
}

// ---------------------------------------------------------------------------
// CliffordElement

CliffordElement::CliffordElement(CliffordAlgebra algebra, Terms terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Scalar CliffordElement::coefficient(std::size_t monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? algebra_.field().zero() : it->second;
}

void CliffordElement::require_same_algebra(const CliffordElement& other) const {
  if (!(algebra_ == other.algebra_)) {
    throw Error(ErrorCode::algebra_mismatch, algebra_.name() + " vs " + other.algebra_.name());
  }
}

void CliffordElement::add_term(std::size_t monomial, const Scalar& value) {
  auto [it, inserted] = terms_.try_emplace(monomial, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& rhs) {
  require_same_algebra(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& rhs) {
  require_same_algebra(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) { return clifford_mul(a, b); }

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  a.require_same_algebra(b);
  return a.terms_ == b.terms_;
}

std::string CliffordElement::to_string() const {
  std::vector<SignedTerm> parts;
  for (const auto& [m, c] : terms_) parts.push_back(format_term(c, m == 0 ? "" : algebra_.monomial_name(m)));
  return join_terms(parts);
}

CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y) {
  if (!(x.algebra() == y.algebra())) {
    throw Error(ErrorCode::algebra_mismatch, x.algebra().name() + " vs " + y.algebra().name());
  }
  CliffordElement::Terms out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      auto [k, beta] = x.algebra().monomial_product(mx, my);
      Scalar term = cx * cy * beta;
      auto [it, inserted] = out.try_emplace(k, term);
      if (!inserted) it->second += term;
    }
  }
  return CliffordElement(x.algebra(), std::move(out));
}

std::string check_generator_relations(const CliffordAlgebra& algebra) {
  const std::uint32_t r = algebra.generators();
  const Scalar& w = algebra.omega();
  for (std::uint32_t i = 1; i <= r; ++i) {
    const CliffordElement ei = algebra.generator(i);
    CliffordElement power = algebra.one();
    for (std::uint32_t k = 0; k < algebra.order(); ++k) power = power * ei;
    if (power != algebra.scalar(w.pow(algebra.mu()[i - 1]))) {
      return "e" + std::to_string(i) + "^" + std::to_string(algebra.order()) + " = w^" +
             std::to_string(algebra.mu()[i - 1]);
    }
    for (std::uint32_t j = i + 1; j <= r; ++j) {
      const CliffordElement ej = algebra.generator(j);
      if (ei * ej != w * (ej * ei)) return "e" + std::to_string(i) + "e" + std::to_string(j) + " = w e" +
                                            std::to_string(j) + "e" + std::to_string(i);
    }
  }
  return {};
}

IdentityReport verify_isomorphism(const CliffordAlgebra& cl, const CdAlgebra& cd, const std::vector<CdElement>& images) {
  if (images.size() != cl.generators()) {
    throw Error(ErrorCode::dimension_mismatch, "need " + std::to_string(cl.generators()) + " generator images, got " +
                                                   std::to_string(images.size()));
  }
  if (cl.dim() != cd.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "dimensions " + std::to_string(cl.dim()) + " and " + std::to_string(cd.dim()) + " differ");
  }
  if (cl.field() != cd.field()) throw Error(ErrorCode::field_mismatch, cl.field().name() + " vs " + cd.field().name());
  for (const auto& img : images)
    if (img.algebra() != cd) throw Error(ErrorCode::algebra_mismatch, "generator image outside " + cd.signature());

  std::uint64_t checks = 0;
  const Scalar& w = cl.omega();
  for (std::uint32_t i = 0; i < cl.generators(); ++i) {
    CdElement power = cd.one();
    for (std::uint32_t k = 0; k < cl.order(); ++k) power = power * images[i];
    ++checks;
    if (power != cd.scalar(w.pow(cl.mu()[i]))) {
      throw Error(ErrorCode::not_homomorphic, "image of e" + std::to_string(i + 1) + " raised to " +
                                                  std::to_string(cl.order()) + " is " + power.to_string());
    }
    for (std::uint32_t j = i + 1; j < cl.generators(); ++j) {
      ++checks;
      if (images[i] * images[j] != w * (images[j] * images[i])) {
        throw Error(ErrorCode::not_homomorphic, "images of e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                                                    " break the swap relation");
      }
    }
  }

  // Monomial images, multiplied in normal order.
  std::vector<CdElement> mono;
  mono.reserve(cl.dim());
  for (std::size_t m = 0; m < cl.dim(); ++m) {
    CdElement value = cd.one();
    const auto k = cl.exponents(m);
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::uint32_t p = 0; p < k[i]; ++p) value = value * images[i];
    mono.push_back(std::move(value));
  }
  Matrix rows;
  for (const auto& v : mono) rows.emplace_back(v.coefficients().begin(), v.coefficients().end());
  ++checks;
  if (rank(rows) != cl.dim()) throw Error(ErrorCode::not_injective, "monomial images are linearly dependent");

  for (std::size_t a = 0; a < cl.dim(); ++a) {
    for (std::size_t b = 0; b < cl.dim(); ++b) {
      const auto [k, beta] = cl.monomial_product(a, b);
      ++checks;
      if (mono[a] * mono[b] != beta * mono[k]) {
        throw Error(ErrorCode::not_homomorphic,
                    "images of " + cl.monomial_name(a) + " * " + cl.monomial_name(b) + " differ from the table");
      }
    }
  }

  IdentityReport report;
  report.identity = "isomorphism";
  report.algebra = cl.name() + " -> " + cd.signature();
  report.trials = checks;
  return report;
}

}  // namespace hypercomplex
