#pragma once

// Finite crystallographic root systems in the Bourbaki numbering, stored as
// integer Cartan data.  Everything downstream works in the simple-root basis
// with exact integer arithmetic; short roots are normalized to squared
// length 2, so all squared lengths lie in {2, 4, 6} and every pairing used
// here is an integer.

#include <vector>

namespace boolsch {

enum class LieType : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

LieType lie_type_from_char(char c);
char to_char(LieType t);

// An element of the root lattice, as coefficients over the simple roots.
// Indexing through coeff() is 1-based to match the Bourbaki labels used
// throughout the public API.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  static RootVector zero(int rank) { return RootVector(std::vector<int>(rank, 0)); }
  static RootVector simple(int rank, int i);

  int rank() const { return static_cast<int>(c_.size()); }
  int coeff(int i) const { return c_[i - 1]; }
  void set_coeff(int i, int value) { c_[i - 1] = value; }
  const std::vector<int>& coeffs() const { return c_; }

  bool is_zero() const;
  bool all_nonnegative() const;

  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  RootVector operator-() const;
  bool operator==(const RootVector& o) const { return c_ == o.c_; }
  bool operator<(const RootVector& o) const { return c_ < o.c_; }

 private:
  std::vector<int> c_;
};

class RootSystem {
 public:
  // Validates the (type, rank) combination: A needs rank >= 1, B and C
  // rank >= 2, D rank >= 4, E rank in {6,7,8}, F rank 4, G rank 2.
  RootSystem(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }

  // Cartan integer a[i][j] = 2<alpha_i, alpha_j> / <alpha_j, alpha_j>.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  // Number of directed Dynkin edges from alpha_i to alpha_j, i.e. -a[i][j].
  int edge_mult(int i, int j) const { return -cartan_[i - 1][j - 1]; }
  // Squared length <alpha_i, alpha_i>, one of 2, 4, 6.
  int norm_sq(int i) const { return norm_[i - 1]; }
  bool adjacent(int i, int j) const;
  const std::vector<int>& neighbors(int i) const { return adj_[i - 1]; }

  // Simple reflection s_j acting on the root lattice.
  RootVector reflect(int j, const RootVector& beta) const;

  // All positive roots, computed on first use by closing the simple roots
  // under the reflections while staying in the positive cone, then cached.
  const std::vector<RootVector>& positive_roots() const;
  bool is_root(const RootVector& beta) const;

  // Invariant bilinear form, integral in this normalization.
  long long inner(const RootVector& x, const RootVector& y) const;

  // <omega_i, beta^vee> for a root beta.  Equals n_i * |alpha_i|^2 / |beta|^2
  // when beta = sum n_k alpha_k.  Throws std::invalid_argument if beta is not
  // a root.
  int pair_fundamental_coroot(int i, const RootVector& beta) const;

  // |W| for the would-be group of this type, from the classical product
  // formulas; used for budget checks before enumeration.
  static long long weyl_order(LieType type, int rank);

 private:
  LieType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> norm_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<long long>> gram_;

  void ensure_positive_roots() const;
  mutable std::vector<RootVector> positive_roots_;
  mutable std::vector<std::vector<int>> positive_root_set_;  // sorted coeffs
};

}  // namespace boolsch
