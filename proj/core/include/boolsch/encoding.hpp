#pragma once

// Text encodings shared by the command line tool and the tests.
//
// Element strings:   "id", "word:3,2,4,5,7", "diagram:{2,3,4,5,7;4>3,4>2,5>4}"
// Element JSON:      {"word":[...]} or {"support":[...],"edges":[[from,to],...]}
// The diagram form is the canonical output; both forms are accepted on input.
//
// Polynomial JSON:   {"variables":["t1",...],"value":[{"exponents":[...],
//                     "coeff":N},...]}  with terms in exponent order.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "boolsch/boolean_element.hpp"
#include "boolsch/poly.hpp"
#include "boolsch/root_system.hpp"

namespace boolsch {

BooleanElement element_from_string(const RootSystem& rs, std::string_view text);
std::string element_to_string(const BooleanElement& b);

BooleanElement element_from_json(const RootSystem& rs, const nlohmann::json& j);
nlohmann::json element_to_json(const BooleanElement& b);

nlohmann::json poly_to_json(const Poly& p, std::string_view var_prefix = "t");
Poly poly_from_json(const nlohmann::json& j);

}  // namespace boolsch
