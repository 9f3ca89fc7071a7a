#pragma once

// Explicit Weyl group enumeration and the equivariant Chevalley rule over
// the full group, forming the second independent oracle.  Elements are
// integer matrices acting on the root lattice in the simple-root basis.

#include <map>
#include <utility>
#include <vector>

#include "boolsch/boolean_element.hpp"
#include "boolsch/poly.hpp"
#include "boolsch/root_system.hpp"

namespace boolsch {

class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);

  int rank() const { return rank_; }
  int entry(int i, int j) const { return m_[(i - 1) * rank_ + (j - 1)]; }
  RootVector apply(const RootVector& v) const;
  WeylElement operator*(const WeylElement& o) const;  // this after o

  const std::vector<int>& flat() const { return m_; }
  bool operator==(const WeylElement& o) const { return m_ == o.m_; }
  bool operator<(const WeylElement& o) const { return m_ < o.m_; }

  // Column j = image of alpha_j, as root coordinates.
  static WeylElement from_columns(int rank, const std::vector<RootVector>& columns);

 private:
  int rank_ = 0;
  std::vector<int> m_;  // row-major
};

class WeylGroup {
 public:
  static constexpr long long kDefaultMaxOrder = 51840;

  // Enumerates the full group breadth-first from the identity.  Throws
  // ResourceLimitError when the group order (known in closed form) exceeds
  // max_order, before any work is done.
  explicit WeylGroup(const RootSystem& rs, long long max_order = kDefaultMaxOrder);

  const RootSystem& root_system() const { return rs_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const WeylElement& element(int idx) const { return elems_[idx]; }
  int length(int idx) const { return len_[idx]; }
  const std::vector<int>& word(int idx) const { return words_[idx]; }
  int identity_index() const { return 0; }

  int index_of(const WeylElement& e) const;  // -1 when absent
  int mult_simple(int idx, int j) const { return rmult_[idx][j - 1]; }

  // Bruhat covers above idx: (index of w, index into positive_roots()) with
  // w = element * s_beta and length(w) = length(idx) + 1.
  const std::vector<std::pair<int, int>>& covers_up(int idx) const { return covers_[idx]; }

  bool bruhat_leq(int u_idx, int w_idx) const;

  bool is_boolean(int idx) const;
  BooleanElement boolean_of(int idx) const;
  int index_of(const BooleanElement& b) const;

  // omega_i - w(omega_i), a nonnegative element of the root lattice.
  RootVector weight_drop(int idx, int i) const;

  // A cohomology class as a finitely supported map index -> coefficient
  // polynomial in the simple roots.
  using ClassVector = std::map<int, Poly>;

  // Multiplies by the class of s_i: the diagonal term carries
  // omega_i - v(omega_i), each Bruhat cover v s_beta contributes
  // <omega_i, beta^vee>.
  ClassVector chevalley_multiply(const ClassVector& f, int i) const;

  // [class of w] (prod_{a in supp(u)} class of s_a) * (prod_{b in supp(v)}
  // class of s_b), computed over the whole group.  For subdiagrams u, v of a
  // boolean w this equals d_{u,v}^w; for non-subdiagrams it returns zero.
  Poly chevalley_constant(const BooleanElement& u, const BooleanElement& v,
                          const BooleanElement& w) const;

 private:
  RootSystem rs_;
  std::vector<WeylElement> simple_;  // s_1..s_n
  std::vector<WeylElement> elems_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> len_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> rmult_;
  std::vector<std::vector<std::pair<int, int>>> covers_;
};

}  // namespace boolsch
