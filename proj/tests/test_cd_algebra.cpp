#include "doctest.h"

#include <set>

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/random.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace hypercomplex;
using test_support::cd;
using test_support::cdq;
using test_support::error_code_of;

namespace {

std::vector<CdAlgebra> rational_signatures() {
  return {cdq({}),         cdq({-1}),         cdq({3}),         cdq({-1, -1}),          cdq({1, -1}),
          cdq({2, -3}),    cdq({-1, -1, -1}), cdq({2, -3, 5}),  cdq({-1, -1, -1, -1}), cdq({1, -2, 3, -1}),
          cdq({-1, -1, -1, -1, -1}), cdq({-1, 2, -3, 4, -6})};
}

std::vector<CdAlgebra> finite_signatures() {
  return {cd(Field::prime(5), {1, -1}), cd(Field::prime(3), {-1, -1, -1}), cd(Field::prime(7), {2, 3, -1, 5}),
          cd(Field::prime(11), {-1, -1, 2, 3, -5})};
}

}  // namespace

TEST_CASE("make_algebra") {
  CHECK(cdq({-1, -1}).dim() == 4);
  CHECK(cdq({}).dim() == 1);
  CHECK(cdq({}).levels() == 0);
  CHECK(cdq({-1, -1}).signature() == "CD(Q; -1,-1)");
  CHECK(cdq({}).signature() == "CD(Q)");

  const CdAlgebra split = cd(Field::prime(5), {1, -1});
  CHECK(split.dim() == 4);
  CHECK(split.signature() == "CD(F5; 1,4)");
  // e_i^2 scalar; distinct units anticommute up to a nonzero multiple of one unit.
  for (std::size_t i = 1; i < 4; ++i) {
    const CdElement sq = mul_recursive(split.basis(i), split.basis(i));
    CHECK(sq.is_scalar());
    CHECK_FALSE(sq.is_zero());
    for (std::size_t j = 1; j < 4; ++j) {
      if (i == j) continue;
      const CdElement ij = mul_recursive(split.basis(i), split.basis(j));
      CHECK(ij == -mul_recursive(split.basis(j), split.basis(i)));
      std::size_t support = 0;
      for (const auto& c : ij.coefficients()) support += c.is_zero() ? 0 : 1;
      CHECK(support == 1);
    }
  }
}

TEST_CASE("make_algebra errors") {
  const Field q = Field::rationals();
  CHECK(error_code_of([&] { (void)CdAlgebra::make(q, {q.from_int(-1), q.zero()}); }) ==
        ErrorCode::invalid_signature);
  CHECK(error_code_of([] { (void)cd(Field::prime(5), {5}); }) == ErrorCode::invalid_signature);
  CHECK(error_code_of([&] { (void)CdAlgebra::make(q, {Field::prime(5).one()}); }) == ErrorCode::field_mismatch);
  CHECK(error_code_of([] { (void)cdq({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}); }) == ErrorCode::invalid_signature);
}

TEST_CASE("mul_recursive examples") {
  const CdAlgebra h = cdq({-1, -1});
  CHECK(mul_recursive(h.basis(1), h.basis(2)) == h.basis(3));
  CHECK(mul_recursive(h.basis(2), h.basis(1)) == -h.basis(3));
  CHECK(mul_recursive(h.parse("1+e1"), h.parse("1-e1")) == h.scalar(h.field().from_int(2)));
  CHECK(h.parse("e1*e2") == h.basis(3));

  SplitMix64 rng(17);
  for (const auto& alg : rational_signatures()) {
    for (int trial = 0; trial < 100; ++trial) {
      const CdElement x = random_element(alg, rng);
      CHECK(mul_recursive(x, alg.one()) == x);
      CHECK(mul_recursive(alg.one(), x) == x);
    }
  }
}

TEST_CASE("mul_recursive agrees with the reference doubling") {
  SplitMix64 rng(5);
  for (const auto& alg : rational_signatures()) {
    CAPTURE(alg.signature());
    const auto g = oracle::gammas_of(alg);
    for (int trial = 0; trial < 100; ++trial) {
      const CdElement x = random_element(alg, rng);
      const CdElement y = random_element(alg, rng);
      CHECK(oracle::to_qvec(mul_recursive(x, y)) == oracle::cd_mul(oracle::to_qvec(x), oracle::to_qvec(y), g));
    }
  }
}

TEST_CASE("build_structure_table examples") {
  const CdAlgebra h = cdq({-1, -1});
  const auto& t = h.table();
  const Field q = Field::rationals();
  CHECK(t(1, 2).k == 3);
  CHECK(t(1, 2).beta == q.one());
  CHECK(t(2, 1).k == 3);
  CHECK(t(2, 1).beta == -q.one());
  CHECK(t(3, 3).k == 0);
  CHECK(t(3, 3).beta == -q.one());

  const CdAlgebra a1 = cdq({7});
  const auto& t1 = a1.table();
  CHECK(t1(1, 1).k == 0);
  CHECK(t1(1, 1).beta == q.from_int(7));

  const CdAlgebra a0 = cdq({});
  const auto& t0 = a0.table();
  CHECK(t0.dim() == 1);
  CHECK(t0(0, 0).k == 0);
  CHECK(t0(0, 0).beta.is_one());
}

TEST_CASE("structure table invariants") {
  auto all = rational_signatures();
  for (const auto& f : finite_signatures()) all.push_back(f);
  for (const auto& alg : all) {
    CAPTURE(alg.signature());
    const auto& t = alg.table();
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i) {
      std::set<std::uint32_t> row;
      CHECK(t(i, i).k == 0);
      CHECK(t(i, i).beta == alg.basis_square(i));
      for (std::size_t j = 0; j < d; ++j) {
        CHECK_FALSE(t(i, j).beta.is_zero());
        row.insert(t(i, j).k);
        if (i != j && i >= 1 && j >= 1) {
          CHECK(t(i, j).k == t(j, i).k);
          CHECK(t(i, j).beta == -t(j, i).beta);
        }
      }
      CHECK(row.size() == d);
    }
    // e_0 is the unit.
    for (std::size_t j = 0; j < d; ++j) {
      CHECK(t(0, j).k == j);
      CHECK(t(j, 0).k == j);
      CHECK(t(0, j).beta.is_one());
      CHECK(t(j, 0).beta.is_one());
    }
  }
}

TEST_CASE("the two backends agree on every basis pair and on random pairs") {
  auto all = rational_signatures();
  for (const auto& f : finite_signatures()) all.push_back(f);
  SplitMix64 rng(2024);
  for (const auto& alg : all) {
    CAPTURE(alg.signature());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        CHECK(mul_table(alg.basis(i), alg.basis(j)) == mul_recursive(alg.basis(i), alg.basis(j)));
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      const CdElement x = random_element(alg, rng);
      const CdElement y = random_element(alg, rng);
      CHECK(mul_table(x, y) == mul_recursive(x, y));
    }
  }
  const CdAlgebra h = cdq({-1, -1});
  CHECK(mul_table(h.basis(1), h.basis(1)) == h.scalar(-h.field().one()));
  CHECK(mul_table(h.zero(), h.parse("1+e2")).is_zero());
}

TEST_CASE("large towers build their table by doubling") {
  const CdAlgebra big = cd(Field::prime(3), {-1, -1, -1, -1, -1, -1, -1, -1});
  CHECK(big.dim() == 256);
  const auto& t = big.table();
  CHECK(t.dim() == 256);
  SplitMix64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t i = rng.below(256);
    const std::size_t j = rng.below(256);
    CHECK(mul_table(big.basis(i), big.basis(j)) == mul_recursive(big.basis(i), big.basis(j)));
  }
}

TEST_CASE("conj") {
  const CdAlgebra h = cdq({-1, -1});
  CHECK(conj(h.basis(1)) == -h.basis(1));
  CHECK(conj(h.parse("1 + 2e1 + 3e2 + 4e3")) == h.parse("1 - 2e1 - 3e2 - 4e3"));
  CHECK(conj(h.parse("7/2")) == h.parse("7/2"));

  SplitMix64 rng(3);
  for (const auto& alg : rational_signatures()) {
    CAPTURE(alg.signature());
    for (int trial = 0; trial < 100; ++trial) {
      const CdElement x = random_element(alg, rng);
      const CdElement y = random_element(alg, rng);
      CHECK(conj(conj(x)) == x);
      CHECK(conj(x * y) == conj(y) * conj(x));
      CHECK((x + conj(x)).is_scalar());
      CHECK((x * conj(x)).is_scalar());
    }
  }
}

TEST_CASE("trace and norm") {
  const CdAlgebra h = cdq({-1, -1});
  const Field q = Field::rationals();
  CHECK(trace(h.parse("1+e1+e2+e3")) == q.from_int(2));
  CHECK(norm(h.parse("1+e1+e2+e3")) == q.from_int(4));
  for (const auto& alg : rational_signatures()) {
    if (alg.levels() == 0) continue;
    CHECK(norm(alg.basis(1)) == -alg.gammas()[0]);
    for (std::size_t m = 1; m < alg.dim(); ++m) CHECK(trace(alg.basis(m)).is_zero());
  }
}

TEST_CASE("t_form") {
  const CdAlgebra h = cdq({-1, -1});
  CHECK(t_form(h.basis(1), h.basis(1)) == h.gammas()[0]);
  CHECK(t_form(h.basis(1), h.basis(2)).is_zero());
  CHECK(t_form(h.one(), h.one()).is_one());

  SplitMix64 rng(11);
  for (const auto& alg : rational_signatures()) {
    for (int trial = 0; trial < 100; ++trial) {
      const CdElement a = random_element(alg, rng);
      const CdElement b = random_element(alg, rng);
      CHECK(t_form(a, conj(a)) == norm(a));
      CHECK(t_form(a, b) == t_form(b, a));
    }
  }
  CHECK(error_code_of([&] { (void)t_form(h.one(), cdq({-1}).one()); }) == ErrorCode::algebra_mismatch);
}

TEST_CASE("vector_part") {
  const CdAlgebra h = cdq({-1, -1});
  CHECK(vector_part(h.parse("5 + e2")) == h.basis(2));
  CHECK(vector_part(h.parse("5")).is_zero());
  SplitMix64 rng(12);
  for (const auto& alg : rational_signatures()) {
    for (std::size_t m = 1; m < alg.dim(); ++m) CHECK(vector_part(alg.basis(m)) == alg.basis(m));
    for (int trial = 0; trial < 100; ++trial) {
      const CdElement x = random_element(alg, rng);
      CHECK(vector_part(vector_part(x)) == vector_part(x));
      CHECK(conj(x) == alg.scalar(x[0]) - vector_part(x));
    }
  }
}

TEST_CASE("units act by their square from both sides") {
  // e_i(e_i x) = e_i^2 x = (x e_i) e_i
  SplitMix64 rng(14);
  std::vector<CdAlgebra> algs = {cdq({-1}),         cdq({2, -3}),        cdq({2, -3, 5}),
                                 cdq({1, -2, 3, -1}), cdq({-1, -1, -1, -1, -1}), cd(Field::prime(7), {2, 3, -1, 5, 6})};
  for (const auto& alg : algs) {
    CAPTURE(alg.signature());
    const int trials = alg.dim() == 32 && alg.field().kind() == FieldKind::rationals ? 60 : 200;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      const CdElement e = alg.basis(i);
      const Scalar& g = alg.basis_square(i);
      for (int trial = 0; trial < trials; ++trial) {
        const CdElement x = random_element(alg, rng);
        CHECK(e * (e * x) == g * x);
        CHECK((x * e) * e == g * x);
      }
    }
  }
}

TEST_CASE("every element satisfies its quadratic equation") {
  SplitMix64 rng(15);
  auto all = rational_signatures();
  for (const auto& f : finite_signatures()) all.push_back(f);
  for (const auto& alg : all) {
    CAPTURE(alg.signature());
    for (int trial = 0; trial < 1000; ++trial) {
      const CdElement x = random_element(alg, rng);
      CHECK((x * x - trace(x) * x + alg.scalar(norm(x))).is_zero());
    }
  }
}

TEST_CASE("element text") {
  const CdAlgebra h = cdq({-1, -1});
  CHECK(h.parse("1 - 2e1 - 3*e2 - 4*e3").to_string() == "1 - 2*e1 - 3*e2 - 4*e3");
  CHECK(h.parse("e2 - 1/2*e3").to_string() == "e2 - 1/2*e3");
  CHECK(h.parse("-e1").to_string() == "-e1");
  CHECK(h.zero().to_string() == "0");
  CHECK(h.parse("e1 + e1 - 2e1").is_zero());

  const CdAlgebra c = cd(Field::cyclotomic(3), {-1, -1});
  CHECK(c.parse("(1+w)*e1 - w*e2").to_string() == "(1+w)*e1 - w*e2");

  SplitMix64 rng(16);
  auto all = rational_signatures();
  for (const auto& f : finite_signatures()) all.push_back(f);
  all.push_back(c);
  for (const auto& alg : all) {
    for (int trial = 0; trial < 50; ++trial) {
      const CdElement x = random_element(alg, rng);
      CHECK(alg.parse(x.to_string()) == x);
    }
  }
}

TEST_CASE("element literal errors") {
  const CdAlgebra h = cdq({-1, -1});
  try {
    (void)h.parse("1 + e4");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS((void)h.parse("1 + + e1"), ParseError);
  CHECK_THROWS_AS((void)h.parse("e"), ParseError);
  CHECK_THROWS_AS((void)h.parse("(e1)*e2"), ParseError);
}

TEST_CASE("algebra mismatch") {
  const CdAlgebra a = cdq({-1, -1});
  const CdAlgebra b = cdq({1, -1});
  CHECK(error_code_of([&] { (void)(a.one() + b.one()); }) == ErrorCode::algebra_mismatch);
  CHECK(error_code_of([&] { (void)mul_recursive(a.one(), b.one()); }) == ErrorCode::algebra_mismatch);
  CHECK(error_code_of([&] { (void)mul_table(a.one(), b.one()); }) == ErrorCode::algebra_mismatch);
  // Structurally equal signatures share elements.
  CHECK(a.one() + cdq({-1, -1}).one() == a.scalar(a.field().from_int(2)));
}
