#include "hypercomplex/identity_lab.hpp"

#include "hypercomplex/error.hpp"

namespace hypercomplex {

namespace {

CdElement sq(const CdElement& x) { return x * x; }

CdElement lift(const CdAlgebra& alg, const Scalar& s) { return alg.scalar(s); }

std::optional<Witness> first_failure(const std::vector<std::string>& names, const std::vector<CdElement>& inputs,
                                     const std::vector<NamedSides>& relations) {
  for (const auto& r : relations) {
    if (r.sides.holds()) continue;
    Witness w;
    for (std::size_t i = 0; i < names.size(); ++i) w.inputs.emplace_back(names[i], inputs[i].to_string());
    w.relation = r.relation;
    w.lhs = r.sides.lhs.to_string();
    w.rhs = r.sides.rhs.to_string();
    return w;
  }
  return std::nullopt;
}

}  // namespace

Sides hall_sides(const CdElement& x, const CdElement& y, const CdElement& z) {
  const CdElement c2 = sq(commutator(x, y));
  return {c2 * z, z * c2};
}

void require_conjugation_sum_hypothesis(const CdAlgebra& algebra) {
  const Field& f = algebra.field();
  for (std::size_t m = 1; m < algebra.dim(); ++m) {
    if (algebra.basis_square(m) != -f.one()) {
      throw Error(ErrorCode::hypothesis_not_met,
                  "e" + std::to_string(m) + "^2 = " + algebra.basis_square(m).to_string() + ", need -1 for every unit");
    }
  }
  const long long n = static_cast<long long>(algebra.dim()) - 1;
  if (f.from_int(1 - n).is_zero()) {
    throw Error(ErrorCode::hypothesis_not_met, "1 - n = " + std::to_string(1 - n) + " is not invertible in " + f.name());
  }
}

Sides conjugation_sum_sides(const CdElement& x) {
  const CdAlgebra& alg = x.algebra();
  require_conjugation_sum_hypothesis(alg);
  CdElement sum = alg.zero();
  for (std::size_t m = 0; m < alg.dim(); ++m) {
    const CdElement e = alg.basis(m);
    sum += (e * x) * e;
  }
  const long long n = static_cast<long long>(alg.dim()) - 1;
  return {alg.field().from_int(1 - n).inverse() * sum, conj(x)};
}

std::vector<NamedSides> trace_form_relations(const CdElement& a, const CdElement& b, const CdElement& c,
                                             const Scalar& lambda) {
  const CdAlgebra& alg = a.algebra();
  const CdElement va = vector_part(a);
  const CdElement vb = vector_part(b);
  const CdElement vavb = va * vb;
  const CdElement vbva = vb * va;
  const Scalar two = alg.field().from_int(2);
  const Scalar tv = t_form(va, vb);
  const CdElement va2 = va * va;

  std::vector<NamedSides> out;
  out.push_back({"T symmetric", {lift(alg, t_form(a, b)), lift(alg, t_form(b, a))}});
  out.push_back({"T homogeneous", {lift(alg, t_form(lambda * a, b)), lift(alg, lambda * t_form(a, b))}});
  out.push_back({"T additive", {lift(alg, t_form(a, b + c)), lift(alg, t_form(a, b) + t_form(a, c))}});
  out.push_back({"T(a, conj a) = a conj a", {lift(alg, t_form(a, conj(a))), a * conj(a)}});
  out.push_back({"pure products anticommute up to 2T", {vavb, lift(alg, two * tv) - vbva}});
  out.push_back({"ab = ba - 2 vb va + 2T", {a * b, b * a - two * vbva + lift(alg, two * tv)}});
  out.push_back({"vector part of pure product", {vector_part(vavb), vavb - lift(alg, tv)}});
  out.push_back({"pure square is scalar", {va2, lift(alg, va2[0])}});
  return out;
}

std::vector<NamedSides> linearized_hall_sides(const CdElement& x, const CdElement& y, const CdElement& z,
                                              const CdElement& u, const CdElement& v) {
  const CdAlgebra& alg = x.algebra();
  const CdElement xy = commutator(x, y);
  const CdElement uy = commutator(u, y);
  const CdElement xv = commutator(x, v);
  const CdElement uv = commutator(u, v);
  auto bracket = [&](const CdElement& p, const CdElement& q) { return commutator(p * q, z); };

  const CdElement first = bracket(xy, uy) + bracket(xy, xv) + bracket(uy, xy) + bracket(xv, xy);
  const CdElement second = bracket(xv, uy) + bracket(uy, xv) + bracket(xy, uv) + bracket(uv, xy);
  const CdElement third = bracket(uy, uv) + bracket(xv, uv) + bracket(uv, uy) + bracket(uv, xv);
  return {{"first linearization", {first, alg.zero()}},
          {"second linearization", {second, alg.zero()}},
          {"third linearization", {third, alg.zero()}}};
}

std::vector<NamedSides> moufang_sides(const CdElement& a, const CdElement& x, const CdElement& y) {
  return {{"left Moufang", {a * (x * (a * y)), ((a * x) * a) * y}},
          {"right Moufang", {((x * a) * y) * a, x * ((a * y) * a)}},
          {"middle Moufang", {(a * x) * (y * a), (a * (x * y)) * a}}};
}

std::vector<NamedSides> alternative_sides(const CdElement& x, const CdElement& y) {
  return {{"left alternative", {sq(x) * y, x * (x * y)}}, {"right alternative", {x * sq(y), (x * y) * y}}};
}

std::vector<NamedSides> flexible_sides(const CdElement& x, const CdElement& y) {
  return {{"flexible", {x * (y * x), (x * y) * x}}};
}

std::vector<NamedSides> power_associative_sides(const CdElement& x) {
  const CdElement x2 = sq(x);
  const CdElement fourth = x2 * x2;
  return {{"x^2 x^2 = (x^2 x) x", {fourth, (x2 * x) * x}}, {"x^2 x^2 = x (x x^2)", {fourth, x * (x * x2)}}};
}

IdentityReport verify_relations(std::string identity, const CdAlgebra& algebra, const SweepOptions& options,
                                const std::vector<std::string>& names, const RelationFamily& relations) {
  (void)algebra.table();
  return run_sweep(std::move(identity), algebra.signature(), options,
                   [&](SplitMix64& rng, std::uint64_t) -> std::optional<Witness> {
                     std::vector<CdElement> inputs;
                     inputs.reserve(names.size());
                     for (std::size_t i = 0; i < names.size(); ++i) inputs.push_back(random_element(algebra, rng));
                     return first_failure(names, inputs, relations(inputs));
                   });
}

IdentityReport verify_hall(const CdAlgebra& algebra, const SweepOptions& options) {
  return verify_relations("hall", algebra, options, {"x", "y", "z"}, [](const std::vector<CdElement>& in) {
    return std::vector<NamedSides>{{"commutator square is central", hall_sides(in[0], in[1], in[2])}};
  });
}

IdentityReport verify_conjugation_sum(const CdAlgebra& algebra, const SweepOptions& options) {
  require_conjugation_sum_hypothesis(algebra);
  return verify_relations("conjugation-sum", algebra, options, {"x"}, [](const std::vector<CdElement>& in) {
    return std::vector<NamedSides>{{"conjugation as a sum of unit sandwiches", conjugation_sum_sides(in[0])}};
  });
}

IdentityReport verify_trace_form_relations(const CdAlgebra& algebra, const SweepOptions& options) {
  (void)algebra.table();
  const std::vector<std::string> names = {"a", "b", "c"};
  return run_sweep("vector-relations", algebra.signature(), options,
                   [&](SplitMix64& rng, std::uint64_t) -> std::optional<Witness> {
                     std::vector<CdElement> in;
                     for (int i = 0; i < 3; ++i) in.push_back(random_element(algebra, rng));
                     const Scalar lambda = random_scalar(algebra.field(), rng);
                     auto w = first_failure(names, in, trace_form_relations(in[0], in[1], in[2], lambda));
                     if (w) w->inputs.emplace_back("lambda", lambda.to_string());
                     return w;
                   });
}

IdentityReport verify_linearized_hall(const CdAlgebra& algebra, const SweepOptions& options) {
  return verify_relations("linearized-hall", algebra, options, {"x", "y", "z", "u", "v"},
                          [](const std::vector<CdElement>& in) {
                            return linearized_hall_sides(in[0], in[1], in[2], in[3], in[4]);
                          });
}

IdentityReport verify_moufang(const CdAlgebra& algebra, const SweepOptions& options) {
  return verify_relations("moufang", algebra, options, {"a", "x", "y"}, [](const std::vector<CdElement>& in) {
    return moufang_sides(in[0], in[1], in[2]);
  });
}

IdentityReport verify_alternative(const CdAlgebra& algebra, const SweepOptions& options) {
  return verify_relations("alternative", algebra, options, {"x", "y"},
                          [](const std::vector<CdElement>& in) { return alternative_sides(in[0], in[1]); });
}

IdentityReport verify_flexible(const CdAlgebra& algebra, const SweepOptions& options) {
  return verify_relations("flexible", algebra, options, {"x", "y"},
                          [](const std::vector<CdElement>& in) { return flexible_sides(in[0], in[1]); });
}

IdentityReport verify_power_associative(const CdAlgebra& algebra, const SweepOptions& options) {
  return verify_relations("power-associative", algebra, options, {"x"},
                          [](const std::vector<CdElement>& in) { return power_associative_sides(in[0]); });
}

WeakAssociativityReports verify_alternative_flexible_power(const CdAlgebra& algebra, const SweepOptions& options) {
  return {verify_alternative(algebra, options), verify_flexible(algebra, options),
          verify_power_associative(algebra, options)};
}

}  // namespace hypercomplex
