#include "hypercomplex/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

#include "hypercomplex/error.hpp"

namespace hypercomplex {

namespace detail {

struct FieldData {
  FieldDescriptor descriptor;
  std::string name;
  std::uint64_t p = 0;               // prime fields
  std::vector<mpz_class> modulus;    // cyclotomic: monic, lowest degree first
  std::size_t degree = 1;
};

}  // namespace detail

namespace {

using detail::FieldData;
using Polynomial = Scalar::Polynomial;

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

// Integer polynomials, lowest degree first.
using IntPoly = std::vector<mpz_class>;

// Exact division of a by a monic polynomial b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const mpz_class c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

IntPoly cyclotomic_polynomial(std::uint32_t n) {
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
  }
  return num;
}

void trim(Polynomial& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Reduce an arbitrary-length polynomial modulo the field modulus into the
// canonical fixed-length representation.
Polynomial reduce(Polynomial a, const FieldData& f) {
  const std::size_t d = f.degree;
  for (std::size_t k = a.size(); k-- > d;) {
    const mpq_class c = a[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) a[k - d + i] -= c * f.modulus[i];
  }
  a.resize(d, mpq_class(0));
  return a;
}

Polynomial poly_mul_raw(const Polynomial& a, const Polynomial& b) {
  std::size_t la = a.size();
  std::size_t lb = b.size();
  while (la > 0 && a[la - 1] == 0) --la;
  while (lb > 0 && b[lb - 1] == 0) --lb;
  if (la == 0 || lb == 0) return {};
  Polynomial out(la + lb - 1, mpq_class(0));
  for (std::size_t i = 0; i < la; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < lb; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Quotient and remainder over Q[x]; b must be nonzero after trimming.
std::pair<Polynomial, Polynomial> poly_divmod(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {{}, a};
  Polynomial q(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead = b.back();
  const std::size_t shift_end = b.size() - 1;
  for (std::size_t k = a.size() - 1;; --k) {
    const mpq_class c = a[k] / lead;
    q[k - shift_end] = c;
    if (c != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) a[k - shift_end + i] -= c * b[i];
    }
    if (k == shift_end) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Inverse of a modulo the (irreducible) field modulus via extended Euclid.
Polynomial poly_inverse(const Polynomial& a, const FieldData& f) {
  Polynomial r0(f.modulus.begin(), f.modulus.end());
  Polynomial r1 = a;
  trim(r1);
  Polynomial s0;
  Polynomial s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Polynomial s = poly_sub(s0, poly_mul_raw(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const mpq_class c = r0.at(0);
  for (auto& coeff : s0) coeff /= c;
  return reduce(std::move(s0), f);
}

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
  if (sgn(v) < 0) return std::nullopt;
  const mpz_class& num = v.get_num();
  const mpz_class& den = v.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

// Tonelli-Shanks; returns nullopt for non-residues.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    const std::uint64_t b = pow_mod(c, std::uint64_t{1} << (m - i - 1), p);
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

std::string format_rational_coefficient(const mpq_class& c, std::size_t power) {
  std::string mono = power == 1 ? "w" : "w^" + std::to_string(power);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  if (c.get_den() == 1) return c.get_str() + mono;
  return c.get_str() + "*" + mono;
}

const FieldData& intern(FieldDescriptor descriptor) {
  static std::mutex mutex;
  static std::map<FieldDescriptor, std::unique_ptr<FieldData>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[descriptor];
  if (!slot) {
    auto data = std::make_unique<FieldData>();
    data->descriptor = descriptor;
    switch (descriptor.kind) {
      case FieldKind::rationals:
        data->name = "Q";
        break;
      case FieldKind::prime_field:
        data->name = "F" + std::to_string(descriptor.parameter);
        data->p = descriptor.parameter;
        break;
      case FieldKind::cyclotomic:
        data->name = "Cyc" + std::to_string(descriptor.parameter);
        data->modulus = cyclotomic_polynomial(descriptor.parameter);
        data->degree = data->modulus.size() - 1;
        break;
    }
    slot = std::move(data);
  }
  return *slot;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() { return Field(&intern({FieldKind::rationals, 0})); }

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw Error(ErrorCode::invalid_field, "characteristic 2 is not supported");
  if (p >= (1U << 31U) || !is_odd_prime(p)) {
    throw Error(ErrorCode::invalid_field, "F" + std::to_string(p) + ": p must be an odd prime below 2^31");
  }
  return Field(&intern({FieldKind::prime_field, p}));
}

Field Field::cyclotomic(std::uint32_t n) {
  if (n < 2 || n > 512) {
    throw Error(ErrorCode::invalid_field, "Cyc" + std::to_string(n) + ": order must be in [2, 512]");
  }
  return Field(&intern({FieldKind::cyclotomic, n}));
}

Field Field::from_descriptor(FieldDescriptor descriptor) {
  switch (descriptor.kind) {
    case FieldKind::rationals: return rationals();
    case FieldKind::prime_field: return prime(descriptor.parameter);
    case FieldKind::cyclotomic: return cyclotomic(descriptor.parameter);
  }
  throw Error(ErrorCode::invalid_field, "unknown field kind");
}

Field Field::parse(std::string_view text) {
  auto parse_suffix = [&](std::size_t skip) -> std::uint32_t {
    const std::string_view digits = text.substr(skip);
    if (digits.empty() || digits.size() > 10 ||
        digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(ErrorCode::invalid_field, "bad field name '" + std::string(text) + "'");
    }
    const unsigned long long v = std::stoull(std::string(digits));
    if (v > 0xFFFFFFFFULL) throw Error(ErrorCode::invalid_field, "field parameter too large");
    return static_cast<std::uint32_t>(v);
  };
  if (text == "Q") return rationals();
  if (text.starts_with("Cyc")) return cyclotomic(parse_suffix(3));
  if (text.starts_with("F")) return prime(parse_suffix(1));
  throw Error(ErrorCode::invalid_field, "bad field name '" + std::string(text) + "' (expected Q, F<p> or Cyc<n>)");
}

const FieldDescriptor& Field::descriptor() const noexcept { return data_->descriptor; }
const std::string& Field::name() const noexcept { return data_->name; }

std::uint32_t Field::characteristic() const noexcept {
  return kind() == FieldKind::prime_field ? static_cast<std::uint32_t>(data_->p) : 0;
}

std::size_t Field::degree() const noexcept { return data_->degree; }

std::span<const mpz_class> Field::modulus() const noexcept { return data_->modulus; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  switch (kind()) {
    case FieldKind::rationals: return Scalar(data_, mpq_class(mpz_class(std::to_string(value))));
    case FieldKind::prime_field: {
      const auto p = static_cast<long long>(data_->p);
      long long r = value % p;
      if (r < 0) r += p;
      return Scalar(data_, static_cast<std::uint64_t>(r));
    }
    case FieldKind::cyclotomic: {
      Polynomial poly(data_->degree, mpq_class(0));
      poly[0] = mpq_class(mpz_class(std::to_string(value)));
      return Scalar(data_, std::move(poly));
    }
  }
  throw Error(ErrorCode::invalid_field, "unknown field kind");
}

Scalar Field::from_integer(const mpz_class& value) const { return from_rational(mpq_class(value)); }

Scalar Field::from_rational(const mpq_class& input) const {
  mpq_class value = input;
  value.canonicalize();
  switch (kind()) {
    case FieldKind::rationals: return Scalar(data_, std::move(value));
    case FieldKind::prime_field: {
      const unsigned long num = mpz_fdiv_ui(value.get_num().get_mpz_t(), data_->p);
      const unsigned long den = mpz_fdiv_ui(value.get_den().get_mpz_t(), data_->p);
      if (den == 0) throw Error(ErrorCode::division_by_zero, "denominator vanishes in " + name());
      return Scalar(data_, static_cast<std::uint64_t>(num)) / Scalar(data_, static_cast<std::uint64_t>(den));
    }
    case FieldKind::cyclotomic: {
      Polynomial poly(data_->degree, mpq_class(0));
      poly[0] = value;
      return Scalar(data_, std::move(poly));
    }
  }
  throw Error(ErrorCode::invalid_field, "unknown field kind");
}

Scalar Field::from_polynomial(std::vector<mpq_class> coefficients) const {
  if (kind() != FieldKind::cyclotomic) {
    throw Error(ErrorCode::field_mismatch, "polynomial scalars need a cyclotomic field, got " + name());
  }
  for (auto& c : coefficients) c.canonicalize();
  return Scalar(data_, reduce(std::move(coefficients), *data_));
}

std::optional<Scalar> Field::root_of_unity(std::uint32_t order) const {
  if (order == 0) return std::nullopt;
  if (order == 1) return one();
  if (order == 2) return -one();
  switch (kind()) {
    case FieldKind::rationals: return std::nullopt;
    case FieldKind::prime_field: {
      const std::uint64_t p = data_->p;
      if ((p - 1) % order != 0) return std::nullopt;
      const auto factors = prime_factors(p - 1);
      for (std::uint64_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto q : factors) {
          if (pow_mod(g, (p - 1) / q, p) == 1) {
            generator = false;
            break;
          }
        }
        if (generator) return Scalar(data_, pow_mod(g, (p - 1) / order, p));
      }
      return std::nullopt;
    }
    case FieldKind::cyclotomic: {
      const std::uint32_t m = descriptor().parameter;
      const Scalar w = primitive_root(*this);
      if (m % order == 0) return w.pow(m / order);
      if (m % 2 == 1 && (2 * m) % order == 0) return (-w).pow(2 * m / order);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Scalar> Field::sqrt(const Scalar& value) const {
  if (value.field() != *this) throw Error(ErrorCode::field_mismatch, "sqrt: scalar from another field");
  switch (kind()) {
    case FieldKind::rationals: {
      auto r = rational_sqrt(value.rational());
      if (!r) return std::nullopt;
      return from_rational(*r);
    }
    case FieldKind::prime_field: {
      auto r = sqrt_mod(value.residue(), data_->p);
      if (!r) return std::nullopt;
      return Scalar(data_, *r);
    }
    case FieldKind::cyclotomic: {
      if (value.is_zero()) return zero();
      // Roots of unity in Q(w) are the powers of a primitive root of order
      // lcm(2, n); try value = r^2 * z^(2k).
      const std::uint32_t n = descriptor().parameter;
      const std::uint32_t group = n % 2 == 0 ? n : 2 * n;
      const Scalar z = *root_of_unity(group);
      Scalar zk = one();
      for (std::uint32_t k = 0; k < group; ++k, zk *= z) {
        const Scalar rest = value / (zk * zk);
        if (auto q = rest.as_rational()) {
          if (auto r = rational_sqrt(*q)) return from_rational(*r) * zk;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Field& field) { return os << field.name(); }

Scalar primitive_root(const Field& field) {
  if (field.kind() != FieldKind::cyclotomic) {
    throw Error(ErrorCode::field_mismatch, "primitive_root needs a cyclotomic field, got " + field.name());
  }
  Polynomial x{mpq_class(0), mpq_class(1)};
  return field.from_polynomial(std::move(x));
}

// ---------------------------------------------------------------------------
// Scalar

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::field_mismatch, "operands from " + field_->name + " and " + other.field_->name);
  }
}

bool Scalar::is_zero() const {
  switch (field_->descriptor.kind) {
    case FieldKind::rationals: return sgn(std::get<mpq_class>(value_)) == 0;
    case FieldKind::prime_field: return std::get<std::uint64_t>(value_) == 0;
    case FieldKind::cyclotomic: {
      for (const auto& c : std::get<Polynomial>(value_)) {
        if (c != 0) return false;
      }
      return true;
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == field().one(); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  switch (field_->descriptor.kind) {
    case FieldKind::rationals: std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_); break;
    case FieldKind::prime_field: {
      auto& v = std::get<std::uint64_t>(value_);
      v = (v + std::get<std::uint64_t>(rhs.value_)) % field_->p;
      break;
    }
    case FieldKind::cyclotomic: {
      auto& v = std::get<Polynomial>(value_);
      const auto& w = std::get<Polynomial>(rhs.value_);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  switch (field_->descriptor.kind) {
    case FieldKind::rationals: std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_); break;
    case FieldKind::prime_field: {
      auto& v = std::get<std::uint64_t>(value_);
      v = (v + field_->p - std::get<std::uint64_t>(rhs.value_)) % field_->p;
      break;
    }
    case FieldKind::cyclotomic: {
      auto& v = std::get<Polynomial>(value_);
      const auto& w = std::get<Polynomial>(rhs.value_);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  switch (field_->descriptor.kind) {
    case FieldKind::rationals: std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_); break;
    case FieldKind::prime_field: {
      auto& v = std::get<std::uint64_t>(value_);
      v = v * std::get<std::uint64_t>(rhs.value_) % field_->p;
      break;
    }
    case FieldKind::cyclotomic: {
      auto& v = std::get<Polynomial>(value_);
      v = reduce(poly_mul_raw(v, std::get<Polynomial>(rhs.value_)), *field_);
      break;
    }
  }
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  switch (field_->descriptor.kind) {
    case FieldKind::rationals: {
      thread_local mpq_class tmp;
      mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(),
              std::get<mpq_class>(b.value_).get_mpq_t());
      std::get<mpq_class>(value_) += tmp;
      break;
    }
    case FieldKind::prime_field: {
      auto& v = std::get<std::uint64_t>(value_);
      v = (v + std::get<std::uint64_t>(a.value_) * std::get<std::uint64_t>(b.value_)) % field_->p;
      break;
    }
    case FieldKind::cyclotomic: *this += a * b; break;
  }
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out = field().zero();
  out -= *this;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero in " + field_->name);
  switch (field_->descriptor.kind) {
    case FieldKind::rationals: return Scalar(field_, mpq_class(1) / std::get<mpq_class>(value_));
    case FieldKind::prime_field:
      return Scalar(field_, pow_mod(std::get<std::uint64_t>(value_), field_->p - 2, field_->p));
    case FieldKind::cyclotomic: return Scalar(field_, poly_inverse(std::get<Polynomial>(value_), *field_));
  }
  throw Error(ErrorCode::invalid_field, "unknown field kind");
}

Scalar Scalar::pow(long long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Scalar result = field().one();
  while (e > 0) {
    if (e & 1ULL) result *= base;
    e >>= 1ULL;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.value_ == b.value_;
}

const mpq_class& Scalar::rational() const {
  if (field_->descriptor.kind != FieldKind::rationals) {
    throw Error(ErrorCode::field_mismatch, "rational() on a scalar of " + field_->name);
  }
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_->descriptor.kind != FieldKind::prime_field) {
    throw Error(ErrorCode::field_mismatch, "residue() on a scalar of " + field_->name);
  }
  return std::get<std::uint64_t>(value_);
}

const Scalar::Polynomial& Scalar::polynomial() const {
  if (field_->descriptor.kind != FieldKind::cyclotomic) {
    throw Error(ErrorCode::field_mismatch, "polynomial() on a scalar of " + field_->name);
  }
  return std::get<Polynomial>(value_);
}

std::optional<mpq_class> Scalar::as_rational() const {
  switch (field_->descriptor.kind) {
    case FieldKind::rationals: return std::get<mpq_class>(value_);
    case FieldKind::prime_field: return std::nullopt;
    case FieldKind::cyclotomic: {
      const auto& poly = std::get<Polynomial>(value_);
      for (std::size_t i = 1; i < poly.size(); ++i) {
        if (poly[i] != 0) return std::nullopt;
      }
      return poly[0];
    }
  }
  return std::nullopt;
}

std::string Scalar::to_string() const {
  switch (field_->descriptor.kind) {
    case FieldKind::rationals: return std::get<mpq_class>(value_).get_str();
    case FieldKind::prime_field: return std::to_string(std::get<std::uint64_t>(value_));
    case FieldKind::cyclotomic: {
      const auto& poly = std::get<Polynomial>(value_);
      std::string out;
      for (std::size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0) continue;
        std::string term = k == 0 ? poly[k].get_str() : format_rational_coefficient(poly[k], k);
        if (!out.empty() && term.front() != '-') out += '+';
        out += term;
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.to_string(); }

}  // namespace hypercomplex
