#pragma once

// Near-linear construction of an insertion path u -> w through supp(v) when
// the Dynkin diagram is a path (type A).  Instead of searching, the algorithm
// repeatedly applies insertions whose new vertex is forced, then matches the
// surviving roots to the missing vertices in increasing order.  Total work is
// O(n^2) in the rank.

#include <optional>

#include "boolsch/boolean_element.hpp"
#include "boolsch/insertion.hpp"
#include "boolsch/root_system.hpp"

namespace boolsch {

// The unique diagram-growing insertion path from u to w inserting supp(v),
// or std::nullopt when none exists.  Orientations of v itself are ignored;
// only its support enters.  Throws std::invalid_argument unless rs has
// type A.
std::optional<InsertionPath> find_insertion_path_type_a(const RootSystem& rs,
                                                        const BooleanElement& u,
                                                        const BooleanElement& v,
                                                        const BooleanElement& w);

// The ordinary structure constant in type A, always 0 or 1: it is 1 exactly
// when growing paths exist in both directions (u through supp(v) and v
// through supp(u)).
int fast_ordinary_constant_type_a(const RootSystem& rs, const BooleanElement& u,
                                  const BooleanElement& v, const BooleanElement& w);

}  // namespace boolsch
