#include "hypercomplex/structure_probe.hpp"

#include <functional>
#include <map>

#include "hypercomplex/error.hpp"
#include "hypercomplex/identity_lab.hpp"
#include "hypercomplex/linear_algebra.hpp"

namespace hypercomplex {

std::string_view probe_method_name(ProbeMethod method) noexcept {
  switch (method) {
    case ProbeMethod::analytic: return "analytic";
    case ProbeMethod::exhaustive: return "exhaustive";
    case ProbeMethod::random: return "random";
    case ProbeMethod::norm_form: return "norm-form";
  }
  return "unknown";
}

template <class Element>
Json ZeroDivisorResult<Element>::to_json() const {
  Json out;
  out["algebra"] = algebra;
  out["found"] = found();
  out["method"] = method ? Json(probe_method_name(*method)) : Json(nullptr);
  out["u"] = pair ? Json(pair->first.to_string()) : Json(nullptr);
  out["v"] = pair ? Json(pair->second.to_string()) : Json(nullptr);
  out["probes"] = probes;
  out["budget"] = budget;
  out["seed"] = seed;
  out["division_certified"] = division_certified;
  out["summary"] = summary();
  return out;
}

template <class Element>
std::string ZeroDivisorResult<Element>::summary() const {
  if (pair) {
    return "(" + pair->first.to_string() + ")(" + pair->second.to_string() + ") = 0 [" +
           std::string(probe_method_name(*method)) + "]";
  }
  if (division_certified) {
    return "no zero divisors: " + std::string(method ? probe_method_name(*method) : "one-dimensional") + " certificate";
  }
  return "no zero divisor found (budget " + std::to_string(budget) + ")";
}

template struct ZeroDivisorResult<CdElement>;
template struct ZeroDivisorResult<CliffordElement>;

namespace {

using Vec = std::vector<Scalar>;

/// Coordinates of an algebra with a multiplication-by-basis table, so the
/// search below serves both algebra families.
struct LinearModel {
  Field field;
  std::size_t dim;
  /// e_i e_j = beta e_k
  std::function<std::pair<std::size_t, Scalar>(std::size_t, std::size_t)> product;
};

Matrix left_matrix(const LinearModel& model, const Vec& u) {
  Matrix m(model.dim, Vec(model.dim, model.field.zero()));
  for (std::size_t i = 0; i < model.dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < model.dim; ++j) {
      const auto [k, beta] = model.product(i, j);
      m[k][j].add_product(u[i], beta);
    }
  }
  return m;
}

std::optional<std::pair<Vec, Vec>> kernel_probe(const LinearModel& model, const Vec& u) {
  auto ker = kernel(left_matrix(model, u), model.field, model.dim);
  if (ker.empty()) return std::nullopt;
  return std::make_pair(u, std::move(ker.front()));
}

Scalar nonzero_coefficient(const Field& f, SplitMix64& rng) {
  switch (f.kind()) {
    case FieldKind::prime_field: return f.from_int(static_cast<long long>(1 + rng.below(f.characteristic() - 1)));
    case FieldKind::rationals: {
      const long long v = rng.between(1, 2);
      return f.from_int(rng.below(2) == 0 ? v : -v);
    }
    case FieldKind::cyclotomic: {
      while (true) {
        const Scalar s = random_scalar(f, rng);
        if (!s.is_zero()) return s;
      }
    }
  }
  return f.one();
}

/// Two or three nonzero coordinates.
Vec sparse_vector(const LinearModel& model, SplitMix64& rng) {
  Vec u(model.dim, model.field.zero());
  const std::size_t support = std::min<std::size_t>(model.dim, 2 + rng.below(2));
  std::size_t placed = 0;
  while (placed < support) {
    const std::size_t i = rng.below(model.dim);
    if (!u[i].is_zero()) continue;
    u[i] = nonzero_coefficient(model.field, rng);
    ++placed;
  }
  return u;
}

bool exhaustive_applies(const LinearModel& model) {
  if (model.field.kind() != FieldKind::prime_field) return false;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < model.dim; ++i) {
    if (count > exhaustive_limit / model.field.characteristic()) return false;
    count *= model.field.characteristic();
  }
  return true;
}

/// u runs over all nonzero vectors whose first nonzero coordinate is 1.
std::optional<std::pair<Vec, Vec>> exhaustive_search(const LinearModel& model, std::uint64_t& probes) {
  const std::uint64_t p = model.field.characteristic();
  for (std::size_t lead = 0; lead < model.dim; ++lead) {
    const std::size_t tail = model.dim - lead - 1;
    std::vector<std::uint64_t> digits(tail, 0);
    while (true) {
      Vec u(model.dim, model.field.zero());
      u[lead] = model.field.one();
      for (std::size_t i = 0; i < tail; ++i) u[lead + 1 + i] = model.field.from_int(static_cast<long long>(digits[i]));
      ++probes;
      if (auto hit = kernel_probe(model, u)) return hit;
      std::size_t i = tail;
      while (i > 0) {
        if (++digits[i - 1] < p) break;
        digits[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return std::nullopt;
}

struct SearchOutcome {
  std::optional<std::pair<Vec, Vec>> pair;
  std::optional<ProbeMethod> method;
  std::uint64_t probes = 0;
  bool exhausted = false;
};

/// Steps after the analytic probes. `check_probe` sees every random probe.
SearchOutcome search(const LinearModel& model, std::uint64_t budget, std::uint64_t seed,
                     const std::function<void(const Vec&)>& check_probe) {
  SearchOutcome out;
  if (exhaustive_applies(model)) {
    out.pair = exhaustive_search(model, out.probes);
    out.method = ProbeMethod::exhaustive;
    out.exhausted = !out.pair;
    return out;
  }
  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    SplitMix64 rng = trial_stream(seed, trial);
    const Vec u = sparse_vector(model, rng);
    ++out.probes;
    if (check_probe) check_probe(u);
    if (auto hit = kernel_probe(model, u)) {
      out.pair = std::move(hit);
      out.method = ProbeMethod::random;
      return out;
    }
  }
  return out;
}

LinearModel cd_model(const CdAlgebra& algebra) {
  const StructureTable* table = &algebra.table();
  return {algebra.field(), algebra.dim(), [table](std::size_t i, std::size_t j) {
            const TableEntry& e = (*table)(i, j);
            return std::make_pair(static_cast<std::size_t>(e.k), e.beta);
          }};
}

LinearModel clifford_model(const CliffordAlgebra& algebra) {
  return {algebra.field(), algebra.dim(),
          [algebra](std::size_t i, std::size_t j) { return algebra.monomial_product(i, j); }};
}

bool norm_is_definite(const CdAlgebra& algebra) {
  if (algebra.field().kind() != FieldKind::rationals || algebra.levels() > 3) return false;
  for (const auto& g : algebra.gammas())
    if (g.rational() >= 0) return false;
  return true;
}

std::optional<std::pair<CdElement, CdElement>> cd_analytic(const CdAlgebra& alg) {
  const Field& f = alg.field();
  for (std::size_t m = 1; m < alg.dim(); ++m) {
    if (const auto r = f.sqrt(alg.basis_square(m))) {
      const CdElement e = r->inverse() * alg.basis(m);
      return std::make_pair(alg.one() + e, alg.one() - e);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<CliffordElement, CliffordElement>> clifford_analytic(const CliffordAlgebra& alg) {
  const Field& f = alg.field();
  for (std::size_t m = 1; m < alg.dim(); ++m) {
    const auto [k, beta] = alg.monomial_product(m, m);
    if (k != 0) continue;
    if (const auto r = f.sqrt(beta)) {
      const CliffordElement e = alg.monomial(m, r->inverse());
      return std::make_pair(alg.one() + e, alg.one() - e);
    }
  }
  // e_i^n = 1: (1 - e_i)(1 + e_i + ... + e_i^{n-1}) = 0.
  for (std::uint32_t i = 1; i <= alg.generators(); ++i) {
    if (alg.mu()[i - 1] != 0) continue;
    const CliffordElement e = alg.generator(i);
    CliffordElement sum = alg.zero();
    CliffordElement power = alg.one();
    for (std::uint32_t k = 0; k < alg.order(); ++k) {
      sum += power;
      power = power * e;
    }
    return std::make_pair(alg.one() - e, sum);
  }
  return std::nullopt;
}

}  // namespace

ZeroDivisorResult<CdElement> find_zero_divisor(const CdAlgebra& algebra, std::uint64_t budget, std::uint64_t seed) {
  ZeroDivisorResult<CdElement> result;
  result.algebra = algebra.signature();
  result.budget = budget;
  result.seed = seed;
  if (algebra.dim() == 1) {
    result.division_certified = true;
    return result;
  }
  if (auto hit = cd_analytic(algebra)) {
    result.pair = std::move(hit);
    result.method = ProbeMethod::analytic;
    return result;
  }
  const bool definite = norm_is_definite(algebra);
  const LinearModel model = cd_model(algebra);
  auto check = [&](const Vec& u) {
    if (definite && algebra.element(u).is_zero() == false && norm(algebra.element(u)).rational() <= 0) {
      throw Error(ErrorCode::invariant_violation, "nonpositive norm under a definite form");
    }
  };
  SearchOutcome outcome = search(model, budget, seed, check);
  result.probes = outcome.probes;
  if (outcome.pair) {
    if (definite) throw Error(ErrorCode::invariant_violation, "zero divisor under a definite norm form");
    result.pair = std::make_pair(algebra.element(std::move(outcome.pair->first)),
                                 algebra.element(std::move(outcome.pair->second)));
    result.method = outcome.method;
  } else if (definite) {
    result.method = ProbeMethod::norm_form;
    result.division_certified = true;
  } else if (outcome.exhausted) {
    result.method = ProbeMethod::exhaustive;
    result.division_certified = true;
  }
  return result;
}

ZeroDivisorResult<CliffordElement> find_zero_divisor(const CliffordAlgebra& algebra, std::uint64_t budget,
                                                     std::uint64_t seed) {
  ZeroDivisorResult<CliffordElement> result;
  result.algebra = algebra.name();
  result.budget = budget;
  result.seed = seed;
  if (algebra.dim() == 1) {
    result.division_certified = true;
    return result;
  }
  if (auto hit = clifford_analytic(algebra)) {
    result.pair = std::move(hit);
    result.method = ProbeMethod::analytic;
    return result;
  }
  const LinearModel model = clifford_model(algebra);
  SearchOutcome outcome = search(model, budget, seed, {});
  result.probes = outcome.probes;
  auto to_element = [&](const Vec& v) {
    CliffordElement::Terms terms;
    for (std::size_t m = 0; m < v.size(); ++m)
      if (!v[m].is_zero()) terms.emplace(m, v[m]);
    return CliffordElement(algebra, std::move(terms));
  };
  if (outcome.pair) {
    result.pair = std::make_pair(to_element(outcome.pair->first), to_element(outcome.pair->second));
    result.method = outcome.method;
  } else if (outcome.exhausted) {
    result.method = ProbeMethod::exhaustive;
    result.division_certified = true;
  }
  return result;
}

IdentityReport verify_quadratic(const CdAlgebra& algebra, const SweepOptions& options) {
  return verify_relations("quadratic", algebra, options, {"x"}, [](const std::vector<CdElement>& in) {
    const CdElement& x = in[0];
    const CdElement lhs = x * x - trace(x) * x + x.algebra().scalar(norm(x));
    return std::vector<NamedSides>{{"x^2 - t(x) x + n(x) = 0", {lhs, x.algebra().zero()}}};
  });
}

std::pair<Scalar, Scalar> cauchy_schwarz_sides(const CdElement& x, const CdElement& y) {
  const CdElement s = x * conj(y) + y * conj(x);
  const CdElement s2 = s * s;
  if (!s2.is_scalar()) throw Error(ErrorCode::invariant_violation, "x conj(y) + y conj(x) is not a scalar");
  return {s2[0], x.algebra().field().from_int(4) * norm(x) * norm(y)};
}

Json CauchySchwarzCounterexample::to_json() const {
  Json out;
  out["x"] = x.to_string();
  out["y"] = y.to_string();
  out["lhs"] = lhs.to_string();
  out["rhs"] = rhs.to_string();
  out["trial"] = trial;
  return out;
}

CauchySchwarzCounterexample find_cauchy_schwarz_counterexample(const CdAlgebra& algebra, std::uint64_t budget,
                                                               std::uint64_t seed) {
  if (algebra.dim() < 2) throw Error(ErrorCode::hypothesis_not_met, "needs dimension at least 2");
  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    SplitMix64 rng = trial_stream(seed, trial);
    const CdElement x = random_element(algebra, rng);
    const CdElement y = random_element(algebra, rng);
    Matrix rows{Vec(x.coefficients().begin(), x.coefficients().end()),
                Vec(y.coefficients().begin(), y.coefficients().end())};
    if (rank(std::move(rows)) < 2) continue;
    auto [lhs, rhs] = cauchy_schwarz_sides(x, y);
    if (lhs != rhs) return {x, y, std::move(lhs), std::move(rhs), trial};
  }
  throw Error(ErrorCode::search_failed, "no counterexample within " + std::to_string(budget) + " draws");
}

namespace {

using Sparse = std::map<std::size_t, Scalar>;

void accumulate(Sparse& into, std::size_t k, const Scalar& value) {
  auto [it, inserted] = into.try_emplace(k, value);
  if (!inserted) it->second += value;
}

/// (e_a e_b) e_c - e_a (e_b e_c)
Sparse basis_associator(const StructureTable& t, std::size_t a, std::size_t b, std::size_t c) {
  Sparse out;
  const TableEntry& ab = t(a, b);
  const TableEntry& left = t(ab.k, c);
  const TableEntry& bc = t(b, c);
  const TableEntry& right = t(a, bc.k);
  accumulate(out, left.k, ab.beta * left.beta);
  accumulate(out, right.k, -(bc.beta * right.beta));
  return out;
}

bool vanishes(const Sparse& s) {
  for (const auto& [k, v] : s)
    if (!v.is_zero()) return false;
  return true;
}

Sparse add(Sparse a, const Sparse& b) {
  for (const auto& [k, v] : b) accumulate(a, k, v);
  return a;
}

bool unit_is_central(const CdAlgebra& algebra, std::size_t k) {
  const StructureTable& t = algebra.table();
  const std::size_t d = algebra.dim();
  for (std::size_t i = 0; i < d; ++i)
    if (t(k, i).k != t(i, k).k || t(k, i).beta != t(i, k).beta) return false;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (!vanishes(basis_associator(t, k, a, b)) || !vanishes(basis_associator(t, a, k, b)) ||
          !vanishes(basis_associator(t, a, b, k))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_associative(const CdAlgebra& algebra) {
  const StructureTable& t = algebra.table();
  const std::size_t d = algebra.dim();
  for (std::size_t a = 1; a < d; ++a)
    for (std::size_t b = 1; b < d; ++b)
      for (std::size_t c = 1; c < d; ++c)
        if (!vanishes(basis_associator(t, a, b, c))) return false;
  return true;
}

bool is_alternative(const CdAlgebra& algebra) {
  // Over char != 2, x^2 y = x(xy) and x y^2 = (xy)y for all x, y is the
  // associator being alternating on basis triples.
  const StructureTable& t = algebra.table();
  const std::size_t d = algebra.dim();
  for (std::size_t a = 1; a < d; ++a) {
    for (std::size_t b = 1; b < d; ++b) {
      for (std::size_t c = 1; c < d; ++c) {
        const Sparse abc = basis_associator(t, a, b, c);
        if (!vanishes(add(abc, basis_associator(t, b, a, c))) || !vanishes(add(abc, basis_associator(t, a, c, b)))) {
          return false;
        }
      }
    }
  }
  return true;
}

// Basis products of a doubling tower land on e_{i xor j}, so both the
// commutant and the center are spanned by the basis units they contain.
std::size_t commutant_dimension(const CdAlgebra& algebra) {
  const StructureTable& t = algebra.table();
  std::size_t count = 0;
  for (std::size_t k = 0; k < algebra.dim(); ++k) {
    bool commutes = true;
    for (std::size_t i = 0; i < algebra.dim() && commutes; ++i)
      commutes = t(k, i).k == t(i, k).k && t(k, i).beta == t(i, k).beta;
    if (commutes) ++count;
  }
  return count;
}

std::size_t center_dimension(const CdAlgebra& algebra) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < algebra.dim(); ++k)
    if (unit_is_central(algebra, k)) ++count;
  return count;
}

Json Classification::to_json() const {
  Json out;
  out["algebra"] = algebra;
  out["label"] = label;
  out["dim"] = dim;
  out["quadratic"] = quadratic;
  out["hall"] = hall;
  out["associative"] = associative;
  out["alternative"] = alternative;
  out["center_dim"] = center_dim;
  out["zero_divisor"] = zero_divisor.to_json();
  return out;
}

Classification classify(const CdAlgebra& algebra, const SweepOptions& options) {
  Classification c;
  c.algebra = algebra.signature();
  c.dim = algebra.dim();
  c.quadratic = verify_quadratic(algebra, options).failures == 0;
  c.hall = verify_hall(algebra, options).failures == 0;
  c.associative = is_associative(algebra);
  c.alternative = c.associative || is_alternative(algebra);
  c.center_dim = center_dimension(algebra);
  c.zero_divisor = find_zero_divisor(algebra, options.trials, options.seed);

  const bool split = c.zero_divisor.found();
  const bool division = c.zero_divisor.division_certified;
  const bool central = c.center_dim == 1;
  const unsigned t = algebra.levels();
  if (t == 0) {
    c.label = "field";
  } else if (!c.alternative) {
    c.label = split ? "not alternative, has zero divisors" : "not alternative";
  } else if (t == 1) {
    c.label = split ? "split quadratic algebra" : division ? "quadratic field extension" : "inconclusive";
  } else if (!c.quadratic || !c.hall || !central) {
    c.label = "inconclusive";
  } else if (t == 2) {
    c.label = split && c.associative ? "generalized split quaternion algebra"
              : division             ? "division quaternion algebra"
                                     : "inconclusive";
  } else {
    c.label = split ? "generalized split octonion algebra" : division ? "division octonion algebra" : "inconclusive";
  }
  return c;
}

}  // namespace hypercomplex
