#include "doctest.h"

#include "hypercomplex/error.hpp"
#include "hypercomplex/structure_probe.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace hypercomplex;
using test_support::cd;
using test_support::cdq;
using test_support::error_code_of;

namespace {

SweepOptions sweep(std::uint64_t trials, std::uint64_t seed = 1) { return SweepOptions{trials, seed, 1}; }

void check_pair(const ZeroDivisorResult<CdElement>& r) {
  REQUIRE(r.found());
  const auto& [u, v] = *r.pair;
  CHECK_FALSE(u.is_zero());
  CHECK_FALSE(v.is_zero());
  CHECK(mul_recursive(u, v).is_zero());
  CHECK(mul_table(u, v).is_zero());
  if (u.algebra().field().kind() == FieldKind::rationals)
    CHECK(oracle::cd_mul(oracle::to_qvec(u), oracle::to_qvec(v), oracle::gammas_of(u.algebra())) ==
        oracle::QVec(u.dim(), 0));
  if (u.algebra().levels() <= 3) CHECK((norm(u) * norm(v)).is_zero());
}

}  // namespace

TEST_CASE("zero divisor from a square gamma") {
  const CdAlgebra a = cdq({1});
  const auto r = find_zero_divisor(a, 100, 1);
  check_pair(r);
  CHECK(r.method == ProbeMethod::analytic);
  CHECK(r.pair->first == a.parse("1+e1"));
  CHECK(r.pair->second == a.parse("1-e1"));
  CHECK(r.summary() == "(1 + e1)(1 - e1) = 0 [analytic]");
}

TEST_CASE("zero divisor from a square gamma that is not 1") {
  const CdAlgebra a = cdq({4, -1});
  const auto r = find_zero_divisor(a, 100, 1);
  check_pair(r);
  CHECK(r.pair->first == a.parse("1+1/2*e1"));
}

TEST_CASE("square from a product unit") {
  // Neither gamma is a square, but e3^2 = 4.
  const CdAlgebra a = cdq({2, -2});
  const auto r = find_zero_divisor(a, 100, 1);
  check_pair(r);
  CHECK(r.method == ProbeMethod::analytic);
  CHECK(r.pair->first == a.parse("1+1/2*e3"));
}

TEST_CASE("split quaternions over F3 by exhaustive search") {
  const CdAlgebra a = cd(Field::prime(3), {-1, -1});
  const auto r = find_zero_divisor(a, 0, 1);
  check_pair(r);
  CHECK(r.method == ProbeMethod::exhaustive);
  CHECK(r.probes <= 40);
}

TEST_CASE("finite field extension has no zero divisors") {
  // -1 is not a square mod 3, so CD(F3; -1) is F9.
  const CdAlgebra a = cd(Field::prime(3), {-1});
  const auto r = find_zero_divisor(a, 0, 1);
  CHECK_FALSE(r.found());
  CHECK(r.division_certified);
  CHECK(r.method == ProbeMethod::exhaustive);
  CHECK(r.probes == 4);
}

TEST_CASE("rational quaternions and octonions are certified division algebras") {
  for (const CdAlgebra& a : {cdq({-1, -1}), cdq({-1, -1, -1}), cdq({-2, -3, -5})}) {
    const auto r = find_zero_divisor(a, 300, 7);
    CHECK_FALSE(r.found());
    CHECK(r.division_certified);
    CHECK(r.method == ProbeMethod::norm_form);
    CHECK(r.probes == 300);
    CHECK(r.summary() == "no zero divisors: norm-form certificate");
  }
}

TEST_CASE("no certificate without a definite norm") {
  // Sedenions have zero divisors, but the definite-norm shortcut must not apply.
  const CdAlgebra s = cdq({-1, -1, -1, -1});
  const auto r = find_zero_divisor(s, 2000, 1);
  CHECK_FALSE(r.division_certified);
  if (r.found()) {
    check_pair(r);
    CHECK(r.method == ProbeMethod::random);
  }
}

TEST_CASE("sedenions have sparse zero divisors") {
  const CdAlgebra s = cdq({-1, -1, -1, -1});
  const auto r = find_zero_divisor(s, 5000, 3);
  check_pair(r);
}

TEST_CASE("unresolved rational quaternions report the budget") {
  // Indefinite norm but not split (-1 is not a square mod 3).
  const CdAlgebra a = cdq({-1, 3});
  const auto r = find_zero_divisor(a, 50, 1);
  CHECK_FALSE(r.found());
  CHECK_FALSE(r.division_certified);
  CHECK(r.probes == 50);
  CHECK(r.summary() == "no zero divisor found (budget 50)");
}

TEST_CASE("zero divisor json") {
  const auto r = find_zero_divisor(cdq({1}), 10, 4);
  const Json j = r.to_json();
  CHECK(j["algebra"] == "CD(Q; 1)");
  CHECK(j["found"] == true);
  CHECK(j["method"] == "analytic");
  CHECK(j["u"] == "1 + e1");
  CHECK(j["seed"] == 4);
  const Json none = find_zero_divisor(cdq({-1, -1}), 10, 4).to_json();
  CHECK(none["u"].is_null());
  CHECK(none["division_certified"] == true);
}

TEST_CASE("zero divisor search is reproducible") {
  const CdAlgebra a = cd(Field::prime(101), {-1, -1, -1});
  const auto r1 = find_zero_divisor(a, 500, 11);
  const auto r2 = find_zero_divisor(a, 500, 11);
  CHECK(r1.to_json() == r2.to_json());
  if (r1.found()) check_pair(r1);
}

TEST_CASE("clifford zero divisors") {
  const Field q = Field::rationals();
  SUBCASE("Cl(1,1)") {
    const CliffordAlgebra cl = make_clpq(q, 1, 1);
    const auto r = find_zero_divisor(cl, 100, 1);
    REQUIRE(r.found());
    CHECK(r.method == ProbeMethod::analytic);
    CHECK((r.pair->first * r.pair->second).is_zero());
    CHECK(r.pair->first == cl.parse("1+e1"));
  }
  SUBCASE("Cl(0,2) is the quaternions") {
    const CliffordAlgebra cl = make_clpq(q, 0, 2);
    const auto r = find_zero_divisor(cl, 200, 1);
    CHECK_FALSE(r.found());
    CHECK_FALSE(r.division_certified);
  }
  SUBCASE("generator with trivial power") {
    const CliffordAlgebra cl = make_clifford(Field::cyclotomic(3), 3, 2, {1, 0});
    const auto r = find_zero_divisor(cl, 100, 1);
    REQUIRE(r.found());
    CHECK((r.pair->first * r.pair->second).is_zero());
    CHECK_FALSE(r.pair->first.is_zero());
    CHECK_FALSE(r.pair->second.is_zero());
  }
  SUBCASE("exhaustive over F5") {
    const CliffordAlgebra cl = make_clpq(Field::prime(5), 0, 2);
    const auto r = find_zero_divisor(cl, 0, 1);
    REQUIRE(r.found());
    CHECK((r.pair->first * r.pair->second).is_zero());
  }
}

TEST_CASE("quadratic relation") {
  const CdAlgebra o = cdq({-1, -1, -1});
  CHECK(verify_quadratic(o, sweep(1000)).failures == 0);
  for (std::size_t m = 0; m < o.dim(); ++m) {
    const CdElement x = o.basis(m);
    CHECK((x * x - trace(x) * x + o.scalar(norm(x))).is_zero());
  }
  const CdElement s = o.scalar(Field::rationals().from_int(7));
  CHECK((s * s - trace(s) * s + o.scalar(norm(s))).is_zero());
  for (const CdAlgebra& a : {cd(Field::prime(7), {3, -2, 5, 1}), cd(Field::cyclotomic(3), {-1, 2})}) {
    const IdentityReport r = verify_quadratic(a, sweep(200, 5));
    CHECK(r.identity == "quadratic");
    CHECK(r.failures == 0);
  }
}

TEST_CASE("cauchy-schwarz sides") {
  const CdAlgebra h = cdq({-1, -1});
  auto [lhs, rhs] = cauchy_schwarz_sides(h.one(), h.basis(1));
  CHECK(lhs.is_zero());
  CHECK(rhs == Field::rationals().from_int(4));
  const CdAlgebra c = cdq({-1});
  std::tie(lhs, rhs) = cauchy_schwarz_sides(c.one(), c.basis(1));
  CHECK(lhs.is_zero());
  CHECK(rhs == Field::rationals().from_int(4));
  const CdElement y = h.parse("1+2e1-e3");
  const CdElement x = Field::rationals().from_int(2) * y;
  std::tie(lhs, rhs) = cauchy_schwarz_sides(x, y);
  CHECK(lhs == rhs);
  CHECK(lhs == Field::rationals().from_int(16) * norm(y) * norm(y));
}

TEST_CASE("cauchy-schwarz counterexamples exist in every dimension above 1") {
  for (const CdAlgebra& a : {cdq({-1}), cdq({1}), cdq({-1, -1}), cdq({2, -3, 5}), cd(Field::prime(5), {-1, -1}),
                             cdq({-1, -1, -1, -1})}) {
    const auto cx = find_cauchy_schwarz_counterexample(a, 10, 1);
    CHECK(cx.lhs != cx.rhs);
    auto [lhs, rhs] = cauchy_schwarz_sides(cx.x, cx.y);
    CHECK(lhs == cx.lhs);
    CHECK(rhs == cx.rhs);
    CHECK(cx.to_json()["trial"] == cx.trial);
  }
  CHECK(error_code_of([] { (void)find_cauchy_schwarz_counterexample(CdAlgebra::make(Field::rationals(), {}), 10, 1); }) ==
        ErrorCode::hypothesis_not_met);
  CHECK(error_code_of([] { (void)find_cauchy_schwarz_counterexample(cdq({-1}), 0, 1); }) == ErrorCode::search_failed);
}

TEST_CASE("structural facts") {
  CHECK(is_associative(cdq({-1, -1})));
  CHECK_FALSE(is_associative(cdq({-1, -1, -1})));
  CHECK(is_alternative(cdq({-1, -1, -1})));
  CHECK(is_alternative(cd(Field::prime(5), {2, 3, 1})));
  CHECK_FALSE(is_alternative(cdq({-1, -1, -1, -1})));
  CHECK(commutant_dimension(cdq({-1})) == 2);
  CHECK(commutant_dimension(cdq({-1, -1})) == 1);
  CHECK(center_dimension(cdq({-1, -1})) == 1);
  CHECK(center_dimension(cdq({-1, -1, -1})) == 1);
  CHECK(center_dimension(cdq({1})) == 2);
  CHECK(center_dimension(cdq({-1, -1, -1, -1})) == 1);
}

TEST_CASE("classification labels") {
  const SweepOptions o = sweep(100);
  CHECK(classify(CdAlgebra::make(Field::rationals(), {}), o).label == "field");
  CHECK(classify(cdq({-1}), o).label == "quadratic field extension");
  CHECK(classify(cdq({1}), o).label == "split quadratic algebra");
  CHECK(classify(cdq({-1, -1}), o).label == "division quaternion algebra");
  CHECK(classify(cdq({1, -1}), o).label == "generalized split quaternion algebra");
  CHECK(classify(cd(Field::prime(3), {-1, -1}), o).label == "generalized split quaternion algebra");
  CHECK(classify(cdq({-1, -1, -1}), o).label == "division octonion algebra");
  CHECK(classify(cdq({-1, -1, 1}), o).label == "generalized split octonion algebra");
  CHECK(classify(cdq({-1, -1, -1, -1}), o).label.starts_with("not alternative"));
  CHECK(classify(cdq({-1, 3}), sweep(5)).label != "division quaternion algebra");
  const Classification c = classify(cdq({-1, -1, 1}), o);
  CHECK(c.quadratic);
  CHECK(c.hall);
  CHECK_FALSE(c.associative);
  CHECK(c.alternative);
  CHECK(c.center_dim == 1);
  CHECK(c.to_json()["zero_divisor"]["found"] == true);
}
