#include "hypercomplex/equation_solver.hpp"

#include <set>

#include "hypercomplex/error.hpp"
#include "hypercomplex/identity_lab.hpp"

namespace hypercomplex {

namespace {

std::vector<std::uint64_t> residues(const CdElement& x) {
  std::vector<std::uint64_t> out;
  out.reserve(x.dim());
  for (const auto& c : x.coefficients()) out.push_back(c.residue());
  return out;
}

bool is_quaternion_type(const CdAlgebra& alg) {
  if (alg.levels() != 2) return false;
  for (std::size_t m = 1; m < 4; ++m)
    if (alg.basis_square(m) != -alg.field().one()) return false;
  return true;
}

}  // namespace

CdElement sylvester_candidate(const CdElement& a, const CdElement& b, const CdElement& p) {
  return vector_part(a) * p + p * vector_part(b);
}

CdElement SolutionFamily::residual(const CdElement& p) const {
  const CdElement x = (*this)(p);
  return a_ * x - x * b_;
}

SolutionFamily sylvester_family(const CdElement& a, const CdElement& b) {
  if (a == conj(b)) throw Error(ErrorCode::excluded_case, "a = conj(b)");
  if (trace(a) != trace(b) || norm(a) != norm(b)) {
    throw Error(ErrorCode::not_similar, "trace " + trace(a).to_string() + " vs " + trace(b).to_string() + ", norm " +
                                            norm(a).to_string() + " vs " + norm(b).to_string());
  }
  return SolutionFamily(a, b);
}

std::vector<CdElement> enumerate_elements(const CdAlgebra& algebra, std::uint64_t limit) {
  const Field& f = algebra.field();
  if (f.kind() != FieldKind::prime_field) throw Error(ErrorCode::invalid_field, "enumeration needs a prime field");
  const std::uint64_t p = f.characteristic();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    if (count > limit / p) throw Error(ErrorCode::search_failed, algebra.signature() + " is too large to enumerate");
    count *= p;
  }
  std::vector<CdElement> out;
  out.reserve(count);
  std::vector<std::uint64_t> digits(algebra.dim(), 0);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(digits.size());
    for (auto d : digits) coeffs.push_back(f.from_int(static_cast<long long>(d)));
    out.push_back(algebra.element(std::move(coeffs)));
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

CompletenessResult sylvester_completeness(const SolutionFamily& family) {
  const CdAlgebra& alg = family.a().algebra();
  const std::vector<CdElement> all = enumerate_elements(alg, 1'000'000);
  std::set<std::vector<std::uint64_t>> image;
  for (const auto& p : all) image.insert(residues(family(p)));

  CompletenessResult result;
  result.parameters = all.size();
  for (const auto& x : all) {
    if (family.a() * x != x * family.b()) continue;
    ++result.solutions;
    if (!image.contains(residues(x))) result.missed.push_back(x);
  }
  return result;
}

IdentityReport verify_commutator_solutions(const CdElement& a, const SweepOptions& options) {
  const CdAlgebra& alg = a.algebra();
  (void)alg.table();
  const std::string text = a.to_string();
  return run_sweep("commutator-solutions", alg.signature(), options,
                   [&](SplitMix64& rng, std::uint64_t) -> std::optional<Witness> {
                     const CdElement v = random_element(alg, rng);
                     const CdElement w = random_element(alg, rng);
                     const CdElement x = commutator(v, w);
                     const CdElement x2 = x * x;
                     const CdElement lhs = x2 * a;
                     const CdElement rhs = a * x2;
                     if (lhs == rhs) return std::nullopt;
                     Witness out;
                     out.inputs = {{"a", text}, {"v", v.to_string()}, {"w", w.to_string()}};
                     out.relation = "x = vw - wv solves x^2 a = a x^2";
                     out.lhs = lhs.to_string();
                     out.rhs = rhs.to_string();
                     return out;
                   });
}

CdElement square_commutator_decomposition(const CdElement& x, const CdElement& y, const CdElement& z) {
  const CdAlgebra& alg = x.algebra();
  if (alg.levels() != 2 && alg.levels() != 3) {
    throw Error(ErrorCode::hypothesis_not_met, "needs a quaternion or octonion type algebra, got " + alg.signature());
  }
  if (z.algebra() != alg || y.algebra() != alg) throw Error(ErrorCode::algebra_mismatch, "operands differ in algebra");
  if (z.is_scalar()) throw Error(ErrorCode::degenerate_witness, "z = " + z.to_string() + " is a scalar");
  const CdElement vz = vector_part(z);
  const CdElement vz2 = vz * vz;
  if (vz2.is_zero()) throw Error(ErrorCode::isotropic_witness, "vec(z)^2 = 0 for z = " + z.to_string());

  const CdElement c = commutator(x, y);
  const CdElement c2 = c * c;
  if (!c2.is_scalar() || !vz2.is_scalar()) {
    throw Error(ErrorCode::invariant_violation, "square of a pure element is not a scalar");
  }
  const Scalar lambda = c2[0] / (alg.field().from_int(2) * vz2[0]);
  CdElement w = lambda * vz;
  if (vz * w + w * vz != c2) throw Error(ErrorCode::invariant_violation, "decomposition does not reproduce (xy - yx)^2");
  return w;
}

CdElement universal_root_expression(const CdElement& x) {
  const CdAlgebra& alg = x.algebra();
  const CdElement i = alg.basis(1);
  const CdElement j = alg.basis(2);
  const CdElement k = alg.basis(3);
  const CdElement x2 = x * x;
  const CdElement xi = x * i;
  const CdElement ix = i * x;
  return xi * x * k + k * xi * x + ix * ix * j - j * xi * xi + x2 * j - j * x2 - i * x2 * k - k * x2 * i;
}

IdentityReport verify_universal_root_equation(const CdAlgebra& algebra, const SweepOptions& options) {
  if (!is_quaternion_type(algebra)) {
    throw Error(ErrorCode::hypothesis_not_met, "needs i^2 = j^2 = k^2 = -1, got " + algebra.signature());
  }
  return verify_relations("universal-root", algebra, options, {"x"}, [](const std::vector<CdElement>& in) {
    return std::vector<NamedSides>{
        {"every quaternion is a root", {universal_root_expression(in[0]), in[0].algebra().zero()}}};
  });
}

}  // namespace hypercomplex
