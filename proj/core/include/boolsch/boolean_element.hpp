#pragma once

// Boolean Weyl group elements: products of distinct simple reflections.
// Such an element is stored canonically as its oriented Dynkin subdiagram,
// the pair (support, edge orientations).  A directed edge (k, j) means the
// reflection s_j occurs before s_k in every reduced word of the element,
// i.e. the arrow points from the later letter toward the earlier one.

#include <utility>
#include <vector>

#include "boolsch/root_system.hpp"

namespace boolsch {

class BooleanElement {
 public:
  BooleanElement() = default;  // identity

  static BooleanElement identity() { return BooleanElement(); }

  // Throws NotBooleanError on a repeated letter, std::invalid_argument on an
  // index outside 1..rank.
  static BooleanElement from_reduced_word(const RootSystem& rs, const std::vector<int>& word);

  // Validates that `edges` orients exactly the Dynkin-adjacent pairs inside
  // `support`, one direction per pair.
  static BooleanElement from_diagram(const RootSystem& rs, std::vector<int> support,
                                     std::vector<std::pair<int, int>> edges);

  const std::vector<int>& support() const { return support_; }
  bool in_support(int i) const;
  int length() const { return static_cast<int>(support_.size()); }
  bool is_identity() const { return support_.empty(); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int from, int to) const;

  // Lexicographically smallest reduced word, i.e. the least linear extension
  // of the precedence order given by the arrows.
  std::vector<int> to_reduced_word() const;

  // Vertices reachable from i along the arrows (including i itself), sorted.
  // Throws std::invalid_argument if i is not in the support.
  std::vector<int> accessible_from(int i) const;

  bool operator==(const BooleanElement& o) const {
    return support_ == o.support_ && edges_ == o.edges_;
  }
  bool operator!=(const BooleanElement& o) const { return !(*this == o); }
  bool operator<(const BooleanElement& o) const {
    if (support_ != o.support_) return support_ < o.support_;
    return edges_ < o.edges_;
  }

 private:
  std::vector<int> support_;                  // sorted
  std::vector<std::pair<int, int>> edges_;    // sorted (from, to) pairs

  friend BooleanElement make_element_unchecked(std::vector<int>,
                                               std::vector<std::pair<int, int>>);
};

// Constructs from already-sorted, already-validated parts.  Internal; used
// where the result is a restriction of a validated diagram.
BooleanElement make_element_unchecked(std::vector<int> support_sorted,
                                      std::vector<std::pair<int, int>> edges_sorted);

// Subdiagram order: same oriented edges on a subset of the support.  For
// boolean elements this is exactly the Bruhat order restriction.
bool diagram_contains(const BooleanElement& inner, const BooleanElement& outer);

// The restriction of w to a subset of its support, inheriting orientations.
BooleanElement restrict_diagram(const BooleanElement& w, const std::vector<int>& sub_support);

// All 2^length(w) subdiagrams of w, sorted.
std::vector<BooleanElement> subdiagrams(const BooleanElement& w);

// Every boolean element of the group: supports by (size, lex), then for each
// support the orientations in binary-counter order over the induced edges
// sorted as unordered pairs; counter bit 0 orients min->max, bit 1 max->min.
std::vector<BooleanElement> enumerate_boolean(const RootSystem& rs);

// All reduced words of b, i.e. all linear extensions of its arrow order.
std::vector<std::vector<int>> all_reduced_words(const BooleanElement& b);

}  // namespace boolsch
