#pragma once

// Divided-difference evaluation of the structure constants, used as an
// independent oracle.  Walking a reduced word of w from the right, each
// letter j acts on a polynomial in the simple roots by
//   alpha_j * s_j   when j lies in both supports,
//   s_j             when j lies in exactly one,
//   the divided difference  p -> (s_j p - p) / alpha_j   when in neither.
// The result, read in the variables a_i = t_i, equals d_{u,v}^w.

#include <vector>

#include "boolsch/boolean_element.hpp"
#include "boolsch/poly.hpp"
#include "boolsch/root_system.hpp"

namespace boolsch {

// The ring endomorphism induced by s_j on polynomials in the simple roots.
Poly apply_simple(const RootSystem& rs, int j, const Poly& p);

// (s_j p - p) / alpha_j.  The numerator is always divisible; a failed
// division indicates a corrupted input and raises std::logic_error.
Poly divided_difference(const RootSystem& rs, int j, const Poly& p);

// Evaluates the recursion along the given reduced word of w.  Throws
// NotBooleanError if the word repeats a letter, std::invalid_argument if it
// does not represent w or if a support of u or v leaves the support of w.
Poly kk_constant(const RootSystem& rs, const BooleanElement& u, const BooleanElement& v,
                 const BooleanElement& w, const std::vector<int>& word_of_w);

// Same, along w's canonical reduced word.
Poly kk_constant(const RootSystem& rs, const BooleanElement& u, const BooleanElement& v,
                 const BooleanElement& w);

}  // namespace boolsch
