#include <cmath>
#include <numbers>

#include "doctest.h"
#include "g2inst/ale_index.hpp"

using namespace g2inst;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

IndexInput z2_with_chi(int chi, int dim) {
  return {Rational(0), cyclic_group_data(2), AdjointCharacter{dim, {Cyclotomic(chi)}}};
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(7).size() == 7);
}

TEST_CASE("arithmetic in Q(zeta)") {
  for (int k : {3, 5, 7, 8, 12}) {
    const Cyclotomic z = Cyclotomic::zeta(k, 1);
    Cyclotomic p = 1;
    for (int i = 0; i < k; ++i) p = p * z;
    CHECK(p == Cyclotomic(1));
    CHECK(z * z.inverse() == Cyclotomic(1));
    // Sum of all k-th roots of unity vanishes.
    Cyclotomic s = 0;
    for (int m = 0; m < k; ++m) s = s + Cyclotomic::zeta(k, m);
    CHECK(s == Cyclotomic(0));
  }
  // Golden ratio: x = 2 cos(2 pi / 5) satisfies x^2 + x - 1 = 0.
  const Cyclotomic x = Cyclotomic::two_cos(5, 1);
  CHECK(x * x + x - Cyclotomic(1) == Cyclotomic(0));
  CHECK_FALSE(x.is_rational());
  CHECK_THROWS_AS(x.rational(), std::domain_error);
  CHECK(std::abs(x.to_double() - 2 * std::cos(2 * std::numbers::pi / 5)) < 1e-12);
  CHECK(Cyclotomic::two_cos(6, 1).rational() == 1);
  CHECK(Cyclotomic::two_cos(3, 1).rational() == -1);
  // Mixing fields: zeta_4 * zeta_3 is a primitive 12th root.
  const Cyclotomic w = Cyclotomic::zeta(4, 1) * Cyclotomic::zeta(3, 1);
  CHECK(w == Cyclotomic::zeta(12, 7));
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), std::domain_error);
}

TEST_CASE("cyclic group traces") {
  const auto z2 = cyclic_group_data(2);
  REQUIRE(z2.elements.size() == 1);
  CHECK(z2.elements[0].trace == Cyclotomic(-2));
  const auto z3 = cyclic_group_data(3);
  REQUIRE(z3.elements.size() == 2);
  for (const auto& e : z3.elements) CHECK(e.trace == Cyclotomic(-1));
  const auto z4 = cyclic_group_data(4);
  REQUIRE(z4.elements.size() == 3);
  CHECK(z4.elements[0].trace == Cyclotomic(0));
  CHECK(z4.elements[1].trace == Cyclotomic(-2));
  CHECK(z4.elements[2].trace == Cyclotomic(0));
  CHECK_THROWS_AS(cyclic_group_data(1), std::invalid_argument);
  CHECK_NOTHROW(cyclic_group_data(9).validate());
}

TEST_CASE("index examples") {
  const auto g = l2_index(gocho_example());
  CHECK(g.value == Cyclotomic(0));
  CHECK(g.integral);
  CHECK(g.warning.empty());
  CHECK(l2_index(gocho_example(), TraceConvention::adjoint).value == Cyclotomic(0));
  // Trivial flat SO(3) connection.
  const auto z3 = cyclic_group_data(3);
  CHECK(l2_index({Rational(0), z3, trivial_character(3, 2)}).value == Cyclotomic(0));
  // Z_2 acting through a: (2/2) (-1 - 3) / (2 + 2) = -1.
  CHECK(l2_index(z2_with_chi(-1, 3)).value == Cyclotomic(-1));
  // Rotation characters on Z_k.
  CHECK(l2_index({Rational(0), cyclic_group_data(2), cyclic_rotation_character(2, 1)}).value == Cyclotomic(-1));
  const auto z8 = l2_index({Rational(0), cyclic_group_data(8), cyclic_rotation_character(8, 2)});
  CHECK(z8.integral);
  CHECK(z8.value == Cyclotomic(-3));
}

TEST_CASE("trivial character gives -2 p1") {
  for (int k : {2, 3, 5, 7}) {
    for (const Rational p1 : {Rational(0), make_rational(1, 2), Rational(-3)}) {
      const auto r = l2_index({p1, cyclic_group_data(k), trivial_character(3, static_cast<std::size_t>(k - 1))});
      CHECK(r.value == Cyclotomic(-2 * p1));
    }
  }
}

TEST_CASE("index is additive in the character") {
  for (int k : {3, 4, 5, 8}) {
    const auto group = cyclic_group_data(k);
    const auto c1 = cyclic_rotation_character(k, 1);
    const auto c2 = trivial_character(1, static_cast<std::size_t>(k - 1));
    AdjointCharacter sum{c1.dim + c2.dim, {}};
    for (std::size_t i = 0; i < c1.values.size(); ++i) sum.values.push_back(c1.values[i] + c2.values[i]);
    const Rational p1a = make_rational(1, 3), p1b = 2;
    const auto whole = l2_index({p1a + p1b, group, sum});
    const auto parts = l2_index({p1a, group, c1}).value + l2_index({p1b, group, c2}).value;
    CHECK(whole.value == parts);
  }
}

TEST_CASE("non-integral values carry a warning") {
  const auto r = l2_index({Rational(0), cyclic_group_data(3), cyclic_rotation_character(3, 1)});
  CHECK_FALSE(r.integral);
  CHECK_FALSE(r.warning.empty());
}

TEST_CASE("invalid input is rejected") {
  // A trace of 2 is the identity.
  CHECK_THROWS_AS(custom_group_data("bad", 2, {Cyclotomic(2)}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(custom_group_data("short", 4, {Cyclotomic(0)}).validate(), std::invalid_argument);
  // Adjoint trace (2 cos(pi/6))^2 - 1 = 2 at k = 12, m = 1.
  IndexInput z12{Rational(0), cyclic_group_data(12), trivial_character(1, 11)};
  z12.character.values[0] = Cyclotomic(0);
  CHECK_NOTHROW(l2_index(z12));
  CHECK_THROWS_AS(l2_index(z12, TraceConvention::adjoint), std::invalid_argument);
  CHECK_THROWS_AS(l2_index({Rational(0), cyclic_group_data(3), trivial_character(3, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(AdjointCharacter({1, {Cyclotomic(3)}}).validate(), std::invalid_argument);
  CHECK(group_from_spec("zk:4").order == 4);
  CHECK_THROWS_AS(group_from_spec("dk:4"), std::invalid_argument);
  CHECK_THROWS_AS(group_from_spec("zk:x"), std::invalid_argument);
  CHECK_THROWS_AS(group_from_spec("zk:1"), std::invalid_argument);
  CHECK(trace_convention_from_string("adjoint") == TraceConvention::adjoint);
  CHECK_THROWS_AS(trace_convention_from_string("spin"), std::invalid_argument);
}
