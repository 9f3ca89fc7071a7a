#include <doctest.h>

#include <stdexcept>

#include "boolsch/kostant_kumar.hpp"

using namespace boolsch;

namespace {

Poly tvar(int n, int i) { return Poly::variable(n, i); }

}  // namespace

TEST_CASE("substitution action on the variables") {
  RootSystem a2(LieType::A, 2);
  CHECK(apply_simple(a2, 1, tvar(2, 1)) == tvar(2, 1) * -1);
  CHECK(apply_simple(a2, 1, tvar(2, 2)) == tvar(2, 1) + tvar(2, 2));
  CHECK(apply_simple(a2, 2, tvar(2, 1)) == tvar(2, 1) + tvar(2, 2));
  CHECK(apply_simple(a2, 1, Poly::constant(2, 5)) == Poly::constant(2, 5));

  RootSystem g2(LieType::G, 2);
  CHECK(apply_simple(g2, 1, tvar(2, 2)) == tvar(2, 2) + tvar(2, 1) * 3);
  CHECK(apply_simple(g2, 2, tvar(2, 1)) == tvar(2, 1) + tvar(2, 2));
}

TEST_CASE("substitution is an involutive ring map") {
  RootSystem f4(LieType::F, 4);
  Poly p = (tvar(4, 1) + tvar(4, 2) * 2) * (tvar(4, 3) + Poly::one(4)) + tvar(4, 4);
  for (int j = 1; j <= 4; ++j) {
    Poly q = apply_simple(f4, j, p);
    CHECK(apply_simple(f4, j, q) == p);
  }
  Poly a = tvar(4, 1) + tvar(4, 3);
  Poly b = tvar(4, 2) * tvar(4, 4);
  CHECK(apply_simple(f4, 2, a * b) == apply_simple(f4, 2, a) * apply_simple(f4, 2, b));
}

TEST_CASE("divided differences lower the degree by one") {
  RootSystem a2(LieType::A, 2);
  // On the variable of its own reflection the operator evaluates to -2.
  CHECK(divided_difference(a2, 1, tvar(2, 1)) == Poly::constant(2, -2));
  CHECK(divided_difference(a2, 1, tvar(2, 2)) == Poly::one(2));
  CHECK(divided_difference(a2, 1, Poly::constant(2, 9)).is_zero());
  CHECK(divided_difference(a2, 1, tvar(2, 1) * tvar(2, 2)) ==
        tvar(2, 1) * -1 - tvar(2, 2) * 2);
  CHECK(divided_difference(a2, 1, tvar(2, 2) * tvar(2, 2)) == tvar(2, 1) + tvar(2, 2) * 2);
}

TEST_CASE("divided difference annihilates its own image") {
  RootSystem c3(LieType::C, 3);
  Poly p = tvar(3, 1) * tvar(3, 2) + tvar(3, 3) * tvar(3, 3) + tvar(3, 2) * 4;
  for (int j = 1; j <= 3; ++j) {
    Poly q = divided_difference(c3, j, p);
    CHECK(divided_difference(c3, j, q).is_zero());
  }
}

TEST_CASE("recursion on the smallest groups") {
  RootSystem a1(LieType::A, 1);
  BooleanElement e = BooleanElement::identity();
  BooleanElement s1 = BooleanElement::from_reduced_word(a1, {1});
  CHECK(kk_constant(a1, s1, s1, s1) == tvar(1, 1));
  CHECK(kk_constant(a1, e, s1, s1) == Poly::one(1));
  CHECK(kk_constant(a1, s1, e, s1) == Poly::one(1));
  CHECK(kk_constant(a1, e, e, s1).is_zero());

  RootSystem a2(LieType::A, 2);
  BooleanElement t1 = BooleanElement::from_reduced_word(a2, {1});
  BooleanElement w21 = BooleanElement::from_reduced_word(a2, {2, 1});
  BooleanElement w12 = BooleanElement::from_reduced_word(a2, {1, 2});
  CHECK(kk_constant(a2, t1, t1, w21) == Poly::one(2));
  CHECK(kk_constant(a2, t1, t1, w12).is_zero());
}

TEST_CASE("the word must spell the target element") {
  RootSystem a2(LieType::A, 2);
  BooleanElement t1 = BooleanElement::from_reduced_word(a2, {1});
  BooleanElement w21 = BooleanElement::from_reduced_word(a2, {2, 1});
  CHECK(kk_constant(a2, t1, t1, w21, {2, 1}) == Poly::one(2));
  CHECK_THROWS_AS(kk_constant(a2, t1, t1, w21, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(kk_constant(a2, t1, t1, w21, {1}), std::invalid_argument);
}

TEST_CASE("support containment gates the recursion inputs") {
  RootSystem a3(LieType::A, 3);
  BooleanElement s3 = BooleanElement::from_reduced_word(a3, {3});
  BooleanElement w21 = BooleanElement::from_reduced_word(a3, {2, 1});
  CHECK_THROWS_AS(kk_constant(a3, s3, s3, w21), std::invalid_argument);
}
