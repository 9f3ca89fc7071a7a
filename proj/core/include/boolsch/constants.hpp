#pragma once

// Structure constants for products of Schubert classes indexed by boolean
// elements, in torus-equivariant and ordinary cohomology.  The equivariant
// value d_{u,v}^w is a polynomial in t_1..t_n with nonnegative integer
// coefficients; the ordinary value is its evaluation at t = 0.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "boolsch/boolean_element.hpp"
#include "boolsch/poly.hpp"
#include "boolsch/root_system.hpp"

namespace boolsch {

struct ConstantOptions {
  // Order in which the elements of supp(v) are inserted when summing over
  // paths u -> w.  Must be a permutation of supp(v); defaults to ascending.
  // The value is independent of this choice.
  std::optional<std::vector<int>> ordering;
};

// d_{u,v}^w: zero unless both u and v are subdiagrams of w and some insertion
// path realizes v -> w through supp(u); otherwise the sum over insertion
// paths u -> w through supp(v) of multiplicity * weight.
Poly equivariant_constant(const RootSystem& rs, const BooleanElement& u,
                          const BooleanElement& v, const BooleanElement& w,
                          const ConstantOptions& options = {});

// c_{u,v}^w: same shape with only the diagram-growing steps, so each path
// contributes its multiplicity.  Equals the t = 0 specialization of the
// equivariant value.
long long ordinary_constant(const RootSystem& rs, const BooleanElement& u,
                            const BooleanElement& v, const BooleanElement& w,
                            const ConstantOptions& options = {});

// All nonzero d_{u,v}^w (or c_{u,v}^w as degree-0 polynomials) over pairs of
// subdiagrams of w, keyed deterministically.
std::map<std::pair<BooleanElement, BooleanElement>, Poly> constant_table(
    const RootSystem& rs, const BooleanElement& w, bool equivariant);

}  // namespace boolsch
