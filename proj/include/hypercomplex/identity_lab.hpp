#pragma once

#include <string>
#include <vector>

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/report.hpp"

namespace hypercomplex {

/// Both sides of one relation evaluated on concrete elements.
struct Sides {
  CdElement lhs;
  CdElement rhs;

  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct NamedSides {
  std::string relation;
  Sides sides;
};

// Evaluators. Each returns the relations checked by the matching verifier.

/// (xy - yx)^2 z against z (xy - yx)^2.
[[nodiscard]] Sides hall_sides(const CdElement& x, const CdElement& y, const CdElement& z);

/// Throws HypothesisNotMet unless every e_m^2 = -1 and 1 - n is invertible,
/// n = dim - 1.
void require_conjugation_sum_hypothesis(const CdAlgebra& algebra);
/// (1/(1-n)) sum_{m=0}^{n} e_m x e_m against conj(x).
[[nodiscard]] Sides conjugation_sum_sides(const CdElement& x);

/// Symmetry, homogeneity and additivity of T, T(a, conj a) = a conj(a), and
/// the four relations between products of pure parts.
[[nodiscard]] std::vector<NamedSides> trace_form_relations(const CdElement& a, const CdElement& b,
                                                           const CdElement& c, const Scalar& lambda);

/// The three commutator sums obtained by substituting x + u, y + v into the
/// commutator-square identity; each should vanish.
[[nodiscard]] std::vector<NamedSides> linearized_hall_sides(const CdElement& x, const CdElement& y,
                                                            const CdElement& z, const CdElement& u,
                                                            const CdElement& v);

/// a(x(ay)) = ((ax)a)y, ((xa)y)a = x((ay)a), (ax)(ya) = (a(xy))a
[[nodiscard]] std::vector<NamedSides> moufang_sides(const CdElement& a, const CdElement& x, const CdElement& y);
/// x^2 y = x(xy), x y^2 = (xy)y
[[nodiscard]] std::vector<NamedSides> alternative_sides(const CdElement& x, const CdElement& y);
/// x(yx) = (xy)x
[[nodiscard]] std::vector<NamedSides> flexible_sides(const CdElement& x, const CdElement& y);
/// x^2 x^2 = (x^2 x) x = x (x x^2)
[[nodiscard]] std::vector<NamedSides> power_associative_sides(const CdElement& x);

// Verifiers. Random elements come from random_element on each trial's stream.

[[nodiscard]] IdentityReport verify_hall(const CdAlgebra& algebra, const SweepOptions& options);
/// Checks the hypothesis first and throws HypothesisNotMet.
[[nodiscard]] IdentityReport verify_conjugation_sum(const CdAlgebra& algebra, const SweepOptions& options);
[[nodiscard]] IdentityReport verify_trace_form_relations(const CdAlgebra& algebra, const SweepOptions& options);
[[nodiscard]] IdentityReport verify_linearized_hall(const CdAlgebra& algebra, const SweepOptions& options);
[[nodiscard]] IdentityReport verify_moufang(const CdAlgebra& algebra, const SweepOptions& options);
[[nodiscard]] IdentityReport verify_alternative(const CdAlgebra& algebra, const SweepOptions& options);
[[nodiscard]] IdentityReport verify_flexible(const CdAlgebra& algebra, const SweepOptions& options);
[[nodiscard]] IdentityReport verify_power_associative(const CdAlgebra& algebra, const SweepOptions& options);

struct WeakAssociativityReports {
  IdentityReport alternative;
  IdentityReport flexible;
  IdentityReport power_associative;
};

/// The three weak associativity sweeps under one seed.
[[nodiscard]] WeakAssociativityReports verify_alternative_flexible_power(const CdAlgebra& algebra,
                                                                       const SweepOptions& options);

/// Generic sweep: draws `arity` random elements named by `names` and reports
/// the first relation of `relations` that fails.
using RelationFamily = std::function<std::vector<NamedSides>(const std::vector<CdElement>&)>;
[[nodiscard]] IdentityReport verify_relations(std::string identity, const CdAlgebra& algebra,
                                              const SweepOptions& options, const std::vector<std::string>& names,
                                              const RelationFamily& relations);

}  // namespace hypercomplex
