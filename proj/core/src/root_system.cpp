#include "boolsch/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace boolsch {

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    case 'E': case 'e': return LieType::E;
    case 'F': case 'f': return LieType::F;
    case 'G': case 'g': return LieType::G;
  }
  throw std::invalid_argument(std::string("unknown Lie type '") + c + "'");
}

char to_char(LieType t) { return static_cast<char>(t); }

RootVector RootVector::simple(int rank, int i) {
  RootVector v = zero(rank);
  v.set_coeff(i, 1);
  return v;
}

bool RootVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool RootVector::all_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

RootVector RootVector::operator+(const RootVector& o) const {
  std::vector<int> r(c_);
  for (size_t k = 0; k < r.size(); ++k) r[k] += o.c_[k];
  return RootVector(std::move(r));
}

RootVector RootVector::operator-(const RootVector& o) const {
  std::vector<int> r(c_);
  for (size_t k = 0; k < r.size(); ++k) r[k] -= o.c_[k];
  return RootVector(std::move(r));
}

RootVector RootVector::operator-() const {
  std::vector<int> r(c_);
  for (int& x : r) x = -x;
  return RootVector(std::move(r));
}

namespace {

void validate_rank(LieType type, int rank) {
  bool ok = false;
  switch (type) {
    case LieType::A: ok = rank >= 1; break;
    case LieType::B: ok = rank >= 2; break;
    case LieType::C: ok = rank >= 2; break;
    case LieType::D: ok = rank >= 4; break;
    case LieType::E: ok = rank >= 6 && rank <= 8; break;
    case LieType::F: ok = rank == 4; break;
    case LieType::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) +
                                " for type " + std::string(1, to_char(type)));
  }
}

}  // namespace

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
  validate_rank(type, rank);
  const int n = rank;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  norm_.assign(n, 2);

  // Off-diagonal Cartan entries and squared lengths, per type.  Simply laced
  // types only need the -1 chain entries; B, C, F, G additionally carry the
  // multiple edge and the long-root lengths.
  auto chain = [&](int i, int j) {  // 1-based single bond
    cartan_[i - 1][j - 1] = -1;
    cartan_[j - 1][i - 1] = -1;
  };
  switch (type) {
    case LieType::A:
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      break;
    case LieType::B:
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      cartan_[n - 2][n - 1] = -2;  // a[n-1][n]
      for (int i = 0; i < n - 1; ++i) norm_[i] = 4;
      break;
    case LieType::C:
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      cartan_[n - 1][n - 2] = -2;  // a[n][n-1]
      norm_[n - 1] = 4;
      break;
    case LieType::D:
      for (int i = 1; i <= n - 2; ++i) chain(i, i + 1);
      chain(n - 2, n);
      break;
    case LieType::E:
      chain(1, 3);
      for (int i = 3; i < n; ++i) chain(i, i + 1);
      chain(2, 4);
      break;
    case LieType::F:
      chain(1, 2);
      chain(2, 3);
      chain(3, 4);
      cartan_[1][2] = -2;  // a[2][3]
      norm_[0] = norm_[1] = 4;
      break;
    case LieType::G:
      chain(1, 2);
      cartan_[1][0] = -3;  // a[2][1]
      norm_[1] = 6;
      break;
  }

  adj_.assign(n, {});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && cartan_[i - 1][j - 1] != 0) adj_[i - 1].push_back(j);

  // Gram matrix <alpha_i, alpha_j> = a[i][j] * |alpha_j|^2 / 2.
  gram_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_[i][j] = static_cast<long long>(cartan_[i][j]) * norm_[j] / 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::logic_error("Cartan data is not symmetrizable");
}

void RootSystem::ensure_positive_roots() const {
  if (!positive_roots_.empty()) return;
  // Close the simple roots under all s_j, keeping vectors in the positive
  // cone.  Every positive root is reached this way because any non-simple
  // positive root has a simple reflection lowering its height.  Deferred to
  // first use: only root enumeration needs it, and at large rank it costs far
  // more than the diagram data.
  std::set<std::vector<int>> seen;
  std::vector<RootVector> work;
  for (int i = 1; i <= rank_; ++i) {
    RootVector a = RootVector::simple(rank_, i);
    seen.insert(a.coeffs());
    work.push_back(a);
  }
  while (!work.empty()) {
    RootVector beta = work.back();
    work.pop_back();
    positive_roots_.push_back(beta);
    for (int j = 1; j <= rank_; ++j) {
      RootVector g = reflect(j, beta);
      if (g.all_nonnegative() && seen.insert(g.coeffs()).second) work.push_back(g);
    }
  }
  std::sort(positive_roots_.begin(), positive_roots_.end());
  for (const RootVector& b : positive_roots_) positive_root_set_.push_back(b.coeffs());
}

const std::vector<RootVector>& RootSystem::positive_roots() const {
  ensure_positive_roots();
  return positive_roots_;
}

bool RootSystem::adjacent(int i, int j) const {
  return i != j && cartan_[i - 1][j - 1] != 0;
}

RootVector RootSystem::reflect(int j, const RootVector& beta) const {
  // s_j multiplies through the Cartan pairing: the coefficient at j becomes
  // sum_{k != j} edge_mult(k, j) n_k - n_j, all others are unchanged.
  long long s = 0;
  for (int k = 1; k <= rank_; ++k) {
    if (k == j) continue;
    s += static_cast<long long>(edge_mult(k, j)) * beta.coeff(k);
  }
  RootVector out = beta;
  out.set_coeff(j, static_cast<int>(s - beta.coeff(j)));
  return out;
}

bool RootSystem::is_root(const RootVector& beta) const {
  if (beta.rank() != rank_) return false;
  ensure_positive_roots();
  if (std::binary_search(positive_root_set_.begin(), positive_root_set_.end(), beta.coeffs()))
    return true;
  return std::binary_search(positive_root_set_.begin(), positive_root_set_.end(),
                            (-beta).coeffs());
}

long long RootSystem::inner(const RootVector& x, const RootVector& y) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x.coeffs()[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += static_cast<long long>(x.coeffs()[i]) * y.coeffs()[j] * gram_[i][j];
  }
  return s;
}

int RootSystem::pair_fundamental_coroot(int i, const RootVector& beta) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("simple root index out of range");
  if (!is_root(beta)) throw std::invalid_argument("pair_fundamental_coroot: not a root");
  long long num = static_cast<long long>(beta.coeff(i)) * norm_sq(i);
  long long den = inner(beta, beta);
  if (num % den != 0) throw std::logic_error("coroot pairing is not integral");
  return static_cast<int>(num / den);
}

long long RootSystem::weyl_order(LieType type, int rank) {
  validate_rank(type, rank);
  auto fact = [](int m) {
    long long f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
  };
  switch (type) {
    case LieType::A: return fact(rank + 1);
    case LieType::B:
    case LieType::C: return (1LL << rank) * fact(rank);
    case LieType::D: return (1LL << (rank - 1)) * fact(rank);
    case LieType::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case LieType::F: return 1152;
    case LieType::G: return 12;
  }
  throw std::logic_error("unreachable");
}

}  // namespace boolsch
