#pragma once

#include <cstdint>
#include <vector>

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/report.hpp"

namespace hypercomplex {

/// x = vec(a) p + p vec(b), without any precondition on a and b.
[[nodiscard]] CdElement sylvester_candidate(const CdElement& a, const CdElement& b, const CdElement& p);

/// Parametrized solutions p -> vec(a) p + p vec(b) of a x = x b.
class SolutionFamily {
 public:
  [[nodiscard]] const CdElement& a() const noexcept { return a_; }
  [[nodiscard]] const CdElement& b() const noexcept { return b_; }

  [[nodiscard]] CdElement operator()(const CdElement& p) const { return sylvester_candidate(a_, b_, p); }
  /// a x - x b at x = (*this)(p).
  [[nodiscard]] CdElement residual(const CdElement& p) const;

 private:
  friend SolutionFamily sylvester_family(const CdElement& a, const CdElement& b);
  SolutionFamily(CdElement a, CdElement b) : a_(std::move(a)), b_(std::move(b)) {}

  CdElement a_;
  CdElement b_;
};

/// Throws ExcludedCase when a = conj(b) and NotSimilar unless a and b share
/// trace and norm.
[[nodiscard]] SolutionFamily sylvester_family(const CdElement& a, const CdElement& b);

struct CompletenessResult {
  std::uint64_t solutions = 0;
  std::uint64_t parameters = 0;
  /// Solutions of a x = x b that no parameter reaches.
  std::vector<CdElement> missed;

  [[nodiscard]] bool complete() const noexcept { return missed.empty(); }
};

/// Enumerates every x and every p of a prime-field algebra with at most 10^6
/// elements and checks that each solution of a x = x b is some family value.
[[nodiscard]] CompletenessResult sylvester_completeness(const SolutionFamily& family);

/// Enumerates all elements of an algebra over F_p in lexicographic order.
/// Throws InvalidField for other fields and SearchFailed above `limit`.
[[nodiscard]] std::vector<CdElement> enumerate_elements(const CdAlgebra& algebra, std::uint64_t limit);

/// x = vw - wv solves x^2 a = a x^2 for random v, w.
[[nodiscard]] IdentityReport verify_commutator_solutions(const CdElement& a, const SweepOptions& options);

/// w with vec(z) w + w vec(z) = (xy - yx)^2, namely w = lambda vec(z) with
/// lambda = (xy - yx)^2 / (2 vec(z)^2). Needs two or three doublings.
/// Throws HypothesisNotMet, DegenerateWitness for scalar z and
/// IsotropicWitness when vec(z)^2 = 0.
[[nodiscard]] CdElement square_commutator_decomposition(const CdElement& x, const CdElement& y, const CdElement& z);

/// x i x k + k x i x + i x i x j - j x i x i + x^2 j - j x^2 - i x^2 k - k x^2 i
/// with i, j, k = e1, e2, e3. Needs quaternion units squaring to -1.
[[nodiscard]] CdElement universal_root_expression(const CdElement& x);
/// Throws HypothesisNotMet unless the algebra is CD(K; -1, -1).
[[nodiscard]] IdentityReport verify_universal_root_equation(const CdAlgebra& algebra, const SweepOptions& options);

}  // namespace hypercomplex
