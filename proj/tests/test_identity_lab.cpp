#include "doctest.h"

#include "hypercomplex/identity_lab.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace hypercomplex;
using test_support::cd;
using test_support::cdq;
using test_support::error_code_of;

namespace {

SweepOptions sweep(std::uint64_t trials, std::uint64_t seed = 1, unsigned workers = 1) {
  return SweepOptions{trials, seed, workers};
}

bool contains_relation(const IdentityReport& r, const std::string& name) {
  for (const auto& w : r.witnesses)
    if (w.relation == name) return true;
  return false;
}

}  // namespace

TEST_CASE("hall examples") {
  const CdAlgebra h = cdq({-1, -1});
  const Sides s = hall_sides(h.basis(1), h.basis(2), h.parse("e1+e3"));
  CHECK(s.lhs == h.parse("-4e1 - 4e3"));
  CHECK(s.rhs == h.parse("-4e1 - 4e3"));

  // Same value through the hand-written quaternion product.
  const oracle::QVec e1{0, 1, 0, 0}, e2{0, 0, 1, 0}, z{0, 1, 0, 1};
  oracle::QVec c = oracle::hamilton(e1, e2);
  const oracle::QVec ba = oracle::hamilton(e2, e1);
  for (int i = 0; i < 4; ++i) c[i] -= ba[i];
  CHECK(oracle::to_qvec(s.lhs) == oracle::hamilton(oracle::hamilton(c, c), z));

  const CdElement x = h.parse("1 + 2e1 - e3");
  const Sides same = hall_sides(x, x, h.basis(2));
  CHECK(same.lhs.is_zero());
  CHECK(same.rhs.is_zero());
}

TEST_CASE("hall holds on a sedenion-type algebra") {
  const IdentityReport r = verify_hall(cdq({-1, -1, -1, -1}), sweep(1000));
  CHECK(r.failures == 0);
  CHECK(r.witnesses.empty());
  CHECK(r.trials == 1000);
  CHECK(r.identity == "hall");
  CHECK(r.algebra == "CD(Q; -1,-1,-1,-1)");
}

TEST_CASE("hall holds for every signature and field up to five doublings") {
  const std::vector<std::vector<long long>> signatures = {
      {}, {-1}, {3}, {-1, -1}, {1, -1}, {2, -3}, {-1, -1, -1}, {2, -3, 5}, {1, 1, -1, 2}, {-1, 2, -3, 4, -6}};
  std::vector<Field> fields = {Field::rationals()};
  for (std::uint32_t p : {3U, 5U, 7U, 11U}) fields.push_back(Field::prime(p));
  for (const auto& f : fields) {
    for (const auto& g : signatures) {
      std::vector<Scalar> gammas;
      bool nonzero = true;
      for (long long v : g) {
        gammas.push_back(f.from_int(v));
        nonzero = nonzero && !gammas.back().is_zero();
      }
      if (!nonzero) continue;
      const CdAlgebra alg = CdAlgebra::make(f, gammas);
      CAPTURE(alg.signature());
      CHECK(verify_hall(alg, sweep(alg.dim() == 32 ? 60 : 200, 3)).failures == 0);
    }
  }
}

TEST_CASE("conjugation sum examples") {
  const CdAlgebra h = cdq({-1, -1});
  const Sides s = conjugation_sum_sides(h.parse("1+2e1+3e2+4e3"));
  CHECK(s.lhs == h.parse("1-2e1-3e2-4e3"));
  CHECK(s.holds());
  const Sides scalar = conjugation_sum_sides(h.parse("7/3"));
  CHECK(scalar.lhs == h.parse("7/3"));

  const IdentityReport r = verify_conjugation_sum(cdq({-1, -1, -1}), sweep(500));
  CHECK(r.failures == 0);
  CHECK(verify_conjugation_sum(cdq({-1, -1, -1, -1}), sweep(100)).failures == 0);
}

TEST_CASE("conjugation sum hypothesis guard") {
  CHECK(error_code_of([] { (void)verify_conjugation_sum(cd(Field::prime(3), {-1, -1, -1}), sweep(10)); }) ==
        ErrorCode::hypothesis_not_met);
  CHECK(error_code_of([] { (void)verify_conjugation_sum(cdq({-1, 2}), sweep(10)); }) ==
        ErrorCode::hypothesis_not_met);
  CHECK(error_code_of([] { (void)verify_conjugation_sum(cdq({1, -1}), sweep(10)); }) ==
        ErrorCode::hypothesis_not_met);
  // n = 1: 1 - n = 0.
  CHECK(error_code_of([] { (void)verify_conjugation_sum(cdq({-1}), sweep(10)); }) ==
        ErrorCode::hypothesis_not_met);
  // F5 at n = 7: 1 - 7 = -6 is a unit.
  CHECK(verify_conjugation_sum(cd(Field::prime(5), {-1, -1, -1}), sweep(200)).failures == 0);
}

TEST_CASE("trace form relations") {
  const CdAlgebra h = cdq({-1, -1});
  const Scalar two = h.field().from_int(2);
  for (const auto& r : trace_form_relations(h.basis(1), h.basis(2), h.basis(3), two)) {
    CAPTURE(r.relation);
    CHECK(r.sides.holds());
  }
  // e1 e2 = 2 T(e1, e2) - e2 e1: e3 = 0 - (-e3).
  const auto rel = trace_form_relations(h.basis(1), h.basis(2), h.basis(3), two);
  CHECK(rel[4].sides.lhs == h.basis(3));
  CHECK(rel[4].sides.rhs == h.basis(3));
  // (e1 + e2)^2 = gamma1 + gamma2.
  const auto sq = trace_form_relations(h.parse("e1+e2"), h.one(), h.one(), two);
  CHECK(sq[7].sides.lhs == h.parse("-2"));
  // b scalar: ab = ba.
  const CdElement a = h.parse("1+e1-e3");
  const CdElement b = h.parse("5");
  const auto scalar_b = trace_form_relations(a, b, h.one(), two);
  CHECK(scalar_b[5].sides.lhs == b * a);

  for (const auto& alg : {cdq({-1}), cdq({1, -1}), cdq({2, -3, 5}), cdq({-1, -1, -1, -1}),
                          cd(Field::prime(7), {3, -1, 2, 5, -2})}) {
    CAPTURE(alg.signature());
    const IdentityReport r = verify_trace_form_relations(alg, sweep(alg.dim() == 32 ? 100 : 300));
    CHECK(r.failures == 0);
  }
}

TEST_CASE("linearized hall") {
  const CdAlgebra h = cdq({-1, -1});
  for (const auto& r : linearized_hall_sides(h.basis(1), h.basis(2), h.basis(2), h.basis(3), h.parse("1+e1"))) {
    CAPTURE(r.relation);
    CHECK(r.sides.lhs.is_zero());
  }
  // u = x, v = y: the first sum is 4 [[x,y]^2, z].
  SplitMix64 rng(4);
  const CdAlgebra s = cdq({-1, -1, -1, -1});
  for (int trial = 0; trial < 20; ++trial) {
    const CdElement x = random_element(s, rng);
    const CdElement y = random_element(s, rng);
    const CdElement z = random_element(s, rng);
    const CdElement c = commutator(x, y);
    const auto sums = linearized_hall_sides(x, y, z, x, y);
    CHECK(sums[0].sides.lhs == s.field().from_int(4) * commutator(c * c, z));
  }
  for (const auto& alg : {cdq({-1, -1}), cdq({2, -3, 5}), cdq({-1, -1, -1, -1}), cd(Field::prime(5), {1, 2, -1, 3})}) {
    CAPTURE(alg.signature());
    CHECK(verify_linearized_hall(alg, sweep(150)).failures == 0);
  }
}

TEST_CASE("moufang") {
  CHECK(verify_moufang(cdq({-1, -1, -1}), sweep(1000)).failures == 0);
  CHECK(verify_moufang(cdq({5}), sweep(200)).failures == 0);
  const IdentityReport r = verify_moufang(cdq({-1, -1, -1, -1}), sweep(1000));
  CHECK(r.failures > 0);
  CHECK_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.size() <= IdentityReport::max_witnesses);
  // Every witness really violates the relation it names.
  const CdAlgebra s = cdq({-1, -1, -1, -1});
  for (const auto& w : r.witnesses) {
    const auto rel = moufang_sides(s.parse(w.inputs[0].second), s.parse(w.inputs[1].second), s.parse(w.inputs[2].second));
    bool found = false;
    for (const auto& x : rel) {
      if (x.relation == w.relation) {
        found = true;
        CHECK_FALSE(x.sides.holds());
        CHECK(x.sides.lhs.to_string() == w.lhs);
      }
    }
    CHECK(found);
  }
}

TEST_CASE("weak associativity") {
  for (const auto& alg : {cdq({-1}), cdq({-1, -1}), cdq({1, -1, 2}), cdq({-1, -1, -1})}) {
    CAPTURE(alg.signature());
    const auto r = verify_alternative_flexible_power(alg, sweep(300));
    CHECK(r.alternative.failures == 0);
    CHECK(r.flexible.failures == 0);
    CHECK(r.power_associative.failures == 0);
  }
  const auto s4 = verify_alternative_flexible_power(cdq({-1, -1, -1, -1}), sweep(1000));
  CHECK(s4.alternative.failures > 0);
  CHECK(s4.flexible.failures == 0);
  CHECK(s4.power_associative.failures == 0);
  CHECK((contains_relation(s4.alternative, "left alternative") || contains_relation(s4.alternative, "right alternative")));

  const auto s5 = verify_alternative_flexible_power(cdq({-1, 2, -3, 4, -6}), sweep(100));
  CHECK(s5.alternative.failures > 0);
  CHECK(s5.flexible.failures == 0);
  CHECK(s5.power_associative.failures == 0);

  const CdAlgebra h = cdq({3, -1});
  for (const auto& r : power_associative_sides(h.basis(1))) {
    CHECK(r.sides.lhs == h.parse("9"));
    CHECK(r.sides.holds());
  }
}

TEST_CASE("reports are reproducible and independent of the worker count") {
  const CdAlgebra s = cdq({-1, -1, -1, -1});
  const IdentityReport one = verify_moufang(s, sweep(300, 77, 1));
  const IdentityReport again = verify_moufang(s, sweep(300, 77, 1));
  const IdentityReport four = verify_moufang(s, sweep(300, 77, 4));
  const IdentityReport many = verify_moufang(s, sweep(300, 77, 13));
  CHECK(one.to_json().dump() == again.to_json().dump());
  CHECK(one.to_json().dump() == four.to_json().dump());
  CHECK(one.to_json().dump() == many.to_json().dump());
  CHECK(one.failures > IdentityReport::max_witnesses);
  CHECK(one.witnesses.size() == IdentityReport::max_witnesses);
  for (std::size_t i = 1; i < one.witnesses.size(); ++i) CHECK(one.witnesses[i - 1].trial < one.witnesses[i].trial);
  CHECK(verify_moufang(s, sweep(300, 78)).to_json().dump() != one.to_json().dump());
}

TEST_CASE("report json shape") {
  const IdentityReport r = verify_hall(cdq({-1, -1}), sweep(5, 9));
  const Json j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"identity", "algebra", "trials", "failures", "seed", "witnesses"});
  CHECK(j["seed"] == 9);
  CHECK(j["witnesses"].is_array());

  const Json w = verify_alternative(cdq({-1, -1, -1, -1}), sweep(50)).to_json()["witnesses"][0];
  CHECK(w["inputs"].contains("x"));
  CHECK(w["inputs"].contains("y"));
  CHECK(w["lhs"].is_string());
  CHECK(w["relation"].is_string());
}

TEST_CASE("failures and witnesses agree") {
  for (const auto& alg : {cdq({-1, -1}), cdq({-1, -1, -1, -1})}) {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const IdentityReport r = verify_alternative(alg, sweep(40, seed));
      CHECK((r.failures == 0) == r.witnesses.empty());
    }
  }
}
