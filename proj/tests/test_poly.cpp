#include <doctest.h>

#include <stdexcept>

#include "boolsch/poly.hpp"

using namespace boolsch;

TEST_CASE("constructors and basic queries") {
  Poly z = Poly::zero(3);
  CHECK(z.is_zero());
  CHECK(z.constant_term() == 0);
  CHECK(z.total_degree() == -1);

  Poly c = Poly::constant(3, 7);
  CHECK(c.constant_term() == 7);
  CHECK(c.total_degree() == 0);

  Poly t2 = Poly::variable(3, 2);
  CHECK(t2.coeff({0, 1, 0}) == 1);
  CHECK(t2.constant_term() == 0);
  CHECK(t2.total_degree() == 1);

  CHECK(Poly::constant(3, 0).is_zero());
}

TEST_CASE("add_term drops cancelled terms") {
  Poly p = Poly::zero(2);
  p.add_term({1, 0}, 5);
  p.add_term({1, 0}, -5);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK_THROWS_AS(p.add_term({1, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("ring arithmetic") {
  Poly t1 = Poly::variable(2, 1);
  Poly t2 = Poly::variable(2, 2);
  Poly s = t1 + t2;
  Poly sq = s * s;
  CHECK(sq.coeff({2, 0}) == 1);
  CHECK(sq.coeff({1, 1}) == 2);
  CHECK(sq.coeff({0, 2}) == 1);
  CHECK(sq.total_degree() == 2);
  CHECK(sq.is_homogeneous(2));
  CHECK_FALSE((sq + Poly::one(2)).is_homogeneous(2));

  CHECK((s - s).is_zero());
  CHECK((s * 0).is_zero());
  CHECK(s * Poly::one(2) == s);
  CHECK(s * Poly::zero(2) == Poly::zero(2));
  CHECK((t1 * 3 - t1 - t1 - t1).is_zero());

  Poly d = t1 - t2;
  CHECK(s * d == t1 * t1 - t2 * t2);
}

TEST_CASE("coefficient sign scan") {
  Poly t1 = Poly::variable(2, 1);
  Poly t2 = Poly::variable(2, 2);
  CHECK((t1 + t2 * 2).has_nonnegative_coeffs());
  CHECK(Poly::zero(2).has_nonnegative_coeffs());
  CHECK_FALSE((t1 - t2).has_nonnegative_coeffs());
}

TEST_CASE("compact printing") {
  Poly p = Poly::zero(4);
  CHECK(p.str() == "0");
  p += Poly::variable(4, 4);
  p += Poly::variable(4, 2) * 2;
  p += Poly::variable(4, 3) * 2;
  CHECK(p.str() == "2t2+2t3+t4");

  Poly q = Poly::variable(2, 1) * Poly::variable(2, 1) - Poly::constant(2, 3);
  CHECK(q.str() == "t1^2-3");
  CHECK(q.str("x") == "x1^2-3");
}
