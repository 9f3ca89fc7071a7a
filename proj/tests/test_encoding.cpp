#include <doctest.h>

#include <stdexcept>

#include "boolsch/encoding.hpp"
#include "boolsch/errors.hpp"

using namespace boolsch;

TEST_CASE("element strings round trip") {
  RootSystem e7(LieType::E, 7);
  BooleanElement b = element_from_string(e7, "word:3,2,4,5,7");
  CHECK(element_to_string(b) == "diagram:{2,3,4,5,7;4>2,4>3,5>4}");
  CHECK(element_from_string(e7, element_to_string(b)) == b);

  CHECK(element_from_string(e7, "id").is_identity());
  CHECK(element_to_string(BooleanElement::identity()) == "id");

  RootSystem a3(LieType::A, 3);
  CHECK(element_from_string(a3, "diagram:{1,3;}") ==
        BooleanElement::from_diagram(a3, {1, 3}, {}));
}

TEST_CASE("malformed element strings are rejected") {
  RootSystem a3(LieType::A, 3);
  CHECK_THROWS_AS(element_from_string(a3, "word:1,1"), NotBooleanError);
  CHECK(element_from_string(a3, "word:").is_identity());
  CHECK_THROWS_AS(element_from_string(a3, "word:x"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_string(a3, "word:1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_string(a3, "diagram:{1,2}"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_string(a3, "diagram:{1,2;1>3}"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_string(a3, "nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_string(a3, ""), std::invalid_argument);
}

TEST_CASE("element json accepts both forms and emits the diagram form") {
  RootSystem a4(LieType::A, 4);
  BooleanElement b = BooleanElement::from_reduced_word(a4, {2, 1, 3});
  nlohmann::json as_word = {{"word", {2, 1, 3}}};
  nlohmann::json as_diagram = {{"support", {1, 2, 3}}, {"edges", {{1, 2}, {3, 2}}}};
  CHECK(element_from_json(a4, as_word) == b);
  CHECK(element_from_json(a4, as_diagram) == b);

  nlohmann::json out = element_to_json(b);
  CHECK(out.contains("support"));
  CHECK(out.contains("edges"));
  CHECK(element_from_json(a4, out) == b);
  CHECK_THROWS_AS(element_from_json(a4, nlohmann::json::object()), std::invalid_argument);
}

TEST_CASE("polynomial json round trips") {
  Poly p = Poly::variable(4, 2) * 2 + Poly::variable(4, 3) * 2 + Poly::variable(4, 4);
  nlohmann::json j = poly_to_json(p);
  CHECK(j["variables"] == nlohmann::json({"t1", "t2", "t3", "t4"}));
  REQUIRE(j["value"].size() == 3);
  // Terms arrive in exponent order, so the pure t4 term is first.
  CHECK(j["value"][0]["exponents"] == nlohmann::json({0, 0, 0, 1}));
  CHECK(j["value"][0]["coeff"] == 1);
  CHECK(poly_from_json(j) == p);

  Poly z = Poly::zero(2);
  nlohmann::json jz = poly_to_json(z);
  CHECK(jz["value"].empty());
  CHECK(poly_from_json(jz) == z);
}
