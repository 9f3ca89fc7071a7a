#include <doctest.h>

#include <stdexcept>

#include "boolsch/constants.hpp"

using namespace boolsch;

namespace {

Poly tvar(int n, int i) { return Poly::variable(n, i); }

}  // namespace

TEST_CASE("smallest nontrivial values") {
  RootSystem a1(LieType::A, 1);
  BooleanElement e = BooleanElement::identity();
  BooleanElement s1 = BooleanElement::from_reduced_word(a1, {1});
  CHECK(equivariant_constant(a1, s1, s1, s1) == tvar(1, 1));
  CHECK(ordinary_constant(a1, s1, s1, s1) == 0);
  CHECK(ordinary_constant(a1, e, s1, s1) == 1);
  CHECK(ordinary_constant(a1, s1, e, s1) == 1);

  RootSystem a2(LieType::A, 2);
  BooleanElement t1 = BooleanElement::from_reduced_word(a2, {1});
  CHECK(ordinary_constant(a2, t1, t1, BooleanElement::from_reduced_word(a2, {2, 1})) == 1);
  CHECK(ordinary_constant(a2, t1, t1, BooleanElement::from_reduced_word(a2, {1, 2})) == 0);
}

TEST_CASE("values beyond one outside type A") {
  RootSystem c4(LieType::C, 4);
  BooleanElement u = BooleanElement::from_reduced_word(c4, {2, 3, 4});
  BooleanElement s4 = BooleanElement::from_reduced_word(c4, {4});
  BooleanElement w = BooleanElement::from_reduced_word(c4, {1, 2, 3, 4});
  CHECK(equivariant_constant(c4, u, s4, u) == tvar(4, 2) * 2 + tvar(4, 3) * 2 + tvar(4, 4));
  CHECK(ordinary_constant(c4, u, s4, w) == 2);
  CHECK(ordinary_constant(c4, s4, u, w) == 2);
}

TEST_CASE("containment and length gates give zero") {
  RootSystem a3(LieType::A, 3);
  BooleanElement s3 = BooleanElement::from_reduced_word(a3, {3});
  BooleanElement s1 = BooleanElement::from_reduced_word(a3, {1});
  BooleanElement w12 = BooleanElement::from_reduced_word(a3, {1, 2});
  CHECK(ordinary_constant(a3, s3, s1, w12) == 0);
  CHECK(equivariant_constant(a3, s3, s1, w12).is_zero());
  // Lengths too short to reach the target.
  BooleanElement w123 = BooleanElement::from_reduced_word(a3, {1, 2, 3});
  CHECK(equivariant_constant(a3, s1, s1, w123).is_zero());
}

TEST_CASE("graded pieces, signs, and symmetry on a full sweep") {
  RootSystem b3(LieType::B, 3);
  for (const BooleanElement& w : enumerate_boolean(b3)) {
    std::vector<BooleanElement> subs = subdiagrams(w);
    for (const BooleanElement& u : subs)
      for (const BooleanElement& v : subs) {
        Poly d = equivariant_constant(b3, u, v, w);
        CHECK(d == equivariant_constant(b3, v, u, w));
        CHECK(d.constant_term() == ordinary_constant(b3, u, v, w));
        if (!d.is_zero()) {
          CHECK(d.has_nonnegative_coeffs());
          CHECK(d.is_homogeneous(u.length() + v.length() - w.length()));
        }
      }
  }
}

TEST_CASE("insertion order is a free choice") {
  RootSystem b3(LieType::B, 3);
  BooleanElement u = BooleanElement::from_reduced_word(b3, {2});
  BooleanElement v = BooleanElement::from_reduced_word(b3, {1, 3});
  BooleanElement w = BooleanElement::from_reduced_word(b3, {1, 2, 3});
  ConstantOptions fwd, rev, bad;
  fwd.ordering = std::vector<int>{1, 3};
  rev.ordering = std::vector<int>{3, 1};
  Poly base = equivariant_constant(b3, u, v, w);
  CHECK(equivariant_constant(b3, u, v, w, fwd) == base);
  CHECK(equivariant_constant(b3, u, v, w, rev) == base);

  bad.ordering = std::vector<int>{1, 2};
  CHECK_THROWS_AS(equivariant_constant(b3, u, v, w, bad), std::invalid_argument);
  bad.ordering = std::vector<int>{1};
  CHECK_THROWS_AS(ordinary_constant(b3, u, v, w, bad), std::invalid_argument);
}

TEST_CASE("tables list exactly the nonzero entries") {
  RootSystem a1(LieType::A, 1);
  BooleanElement e = BooleanElement::identity();
  BooleanElement s1 = BooleanElement::from_reduced_word(a1, {1});

  auto eq = constant_table(a1, s1, true);
  REQUIRE(eq.size() == 3);
  CHECK(eq.at({e, s1}) == Poly::one(1));
  CHECK(eq.at({s1, e}) == Poly::one(1));
  CHECK(eq.at({s1, s1}) == tvar(1, 1));

  auto ord = constant_table(a1, s1, false);
  REQUIRE(ord.size() == 2);
  CHECK(ord.at({e, s1}) == Poly::one(1));
  CHECK(ord.at({s1, e}) == Poly::one(1));
  CHECK(ord.count({s1, s1}) == 0);
}

TEST_CASE("table entries agree with direct evaluation") {
  RootSystem g2(LieType::G, 2);
  BooleanElement w = BooleanElement::from_reduced_word(g2, {2, 1});
  auto eq = constant_table(g2, w, true);
  for (const auto& [key, val] : eq) {
    CHECK(val == equivariant_constant(g2, key.first, key.second, w));
    CHECK_FALSE(val.is_zero());
  }
  // Every omitted pair really is zero.
  std::vector<BooleanElement> subs = subdiagrams(w);
  int nonzero = 0;
  for (const BooleanElement& u : subs)
    for (const BooleanElement& v : subs)
      if (!equivariant_constant(g2, u, v, w).is_zero()) ++nonzero;
  CHECK(nonzero == static_cast<int>(eq.size()));
}
