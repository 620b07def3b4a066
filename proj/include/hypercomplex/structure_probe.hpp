#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/clifford.hpp"
#include "hypercomplex/report.hpp"

namespace hypercomplex {

/// How a zero-divisor search ended.
enum class ProbeMethod {
  analytic,    // a unit or monomial whose square is a square scalar, or a generator with e^n = 1
  exhaustive,  // every nonzero u of a finite algebra, kernel of left multiplication
  random,      // sparse random u, kernel of left multiplication
  norm_form,   // definite norm over Q, no search needed
};

[[nodiscard]] std::string_view probe_method_name(ProbeMethod method) noexcept;

template <class Element>
struct ZeroDivisorResult {
  std::string algebra;
  std::optional<std::pair<Element, Element>> pair;
  std::optional<ProbeMethod> method;
  std::uint64_t probes = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  /// True when the absence of zero divisors is proven: definite norm form
  /// over Q with at most three doublings, or an exhausted finite algebra.
  bool division_certified = false;

  [[nodiscard]] bool found() const noexcept { return pair.has_value(); }
  [[nodiscard]] Json to_json() const;
  /// "(1 + e1)(1 - e1) = 0 [analytic]" or "no zero divisor found (budget N)".
  [[nodiscard]] std::string summary() const;
};

/// Exhaustive search applies when |K|^dim is at most this.
inline constexpr std::uint64_t exhaustive_limit = 10'000'000;

/// Finds nonzero u, v with uv = 0: analytic probes, then exhaustive search
/// over small prime-field algebras, then `budget` sparse random probes.
[[nodiscard]] ZeroDivisorResult<CdElement> find_zero_divisor(const CdAlgebra& algebra, std::uint64_t budget,
                                                             std::uint64_t seed);
[[nodiscard]] ZeroDivisorResult<CliffordElement> find_zero_divisor(const CliffordAlgebra& algebra,
                                                                   std::uint64_t budget, std::uint64_t seed);

/// x^2 - trace(x) x + norm(x) = 0 on random x.
[[nodiscard]] IdentityReport verify_quadratic(const CdAlgebra& algebra, const SweepOptions& options);

/// (x conj(y) + y conj(x))^2 against 4 (x conj x)(y conj y), both as scalars.
[[nodiscard]] std::pair<Scalar, Scalar> cauchy_schwarz_sides(const CdElement& x, const CdElement& y);

struct CauchySchwarzCounterexample {
  CdElement x;
  CdElement y;
  Scalar lhs;
  Scalar rhs;
  std::uint64_t trial = 0;

  [[nodiscard]] Json to_json() const;
};

/// Draws linearly independent random pairs until the two sides differ.
/// Throws HypothesisNotMet for dim 1 and SearchFailed after `budget` draws.
[[nodiscard]] CauchySchwarzCounterexample find_cauchy_schwarz_counterexample(const CdAlgebra& algebra,
                                                                             std::uint64_t budget,
                                                                             std::uint64_t seed);

/// Exact structural facts, computed on basis elements.
[[nodiscard]] bool is_associative(const CdAlgebra& algebra);
[[nodiscard]] bool is_alternative(const CdAlgebra& algebra);
/// Dimension of { z : z x = x z for all x }.
[[nodiscard]] std::size_t commutant_dimension(const CdAlgebra& algebra);
/// Dimension of the center: commuting elements that also associate with
/// everything.
[[nodiscard]] std::size_t center_dimension(const CdAlgebra& algebra);

struct Classification {
  std::string algebra;
  std::string label;
  std::size_t dim = 0;
  bool quadratic = false;
  bool hall = false;
  bool associative = false;
  bool alternative = false;
  std::size_t center_dim = 0;
  ZeroDivisorResult<CdElement> zero_divisor;

  [[nodiscard]] Json to_json() const;
};

/// Diagnostic label from the checks above. Split labels need a zero divisor,
/// center K and the matching associativity law; division labels need a
/// certificate. Anything else is "inconclusive".
[[nodiscard]] Classification classify(const CdAlgebra& algebra, const SweepOptions& options);

}  // namespace hypercomplex
