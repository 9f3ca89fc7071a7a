#include "boolsch/weyl_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "boolsch/errors.hpp"

namespace boolsch {

WeylElement WeylElement::identity(int rank) {
  WeylElement e;
  e.rank_ = rank;
  e.m_.assign(static_cast<size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) e.m_[i * rank + i] = 1;
  return e;
}

WeylElement WeylElement::from_columns(int rank, const std::vector<RootVector>& columns) {
  WeylElement e;
  e.rank_ = rank;
  e.m_.assign(static_cast<size_t>(rank) * rank, 0);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) e.m_[i * rank + j] = columns[j].coeffs()[i];
  return e;
}

RootVector WeylElement::apply(const RootVector& v) const {
  std::vector<int> out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += static_cast<long long>(m_[i * rank_ + j]) * v.coeffs()[j];
    out[i] = static_cast<int>(s);
  }
  return RootVector(std::move(out));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  r.rank_ = rank_;
  r.m_.assign(m_.size(), 0);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) {
      int a = m_[i * rank_ + k];
      if (a == 0) continue;
      for (int j = 0; j < rank_; ++j) r.m_[i * rank_ + j] += a * o.m_[k * rank_ + j];
    }
  return r;
}

WeylGroup::WeylGroup(const RootSystem& rs, long long max_order) : rs_(rs) {
  const int n = rs_.rank();
  const long long order = RootSystem::weyl_order(rs_.type(), n);
  if (order > max_order)
    throw ResourceLimitError("Weyl group of order " + std::to_string(order) +
                             " exceeds the budget of " + std::to_string(max_order));

  simple_.reserve(n);
  for (int j = 1; j <= n; ++j) {
    std::vector<RootVector> cols;
    for (int i = 1; i <= n; ++i) cols.push_back(rs_.reflect(j, RootVector::simple(n, i)));
    simple_.push_back(WeylElement::from_columns(n, cols));
  }

  elems_.push_back(WeylElement::identity(n));
  index_.emplace(elems_[0].flat(), 0);
  len_.push_back(0);
  words_.push_back({});
  for (size_t head = 0; head < elems_.size(); ++head) {
    rmult_.emplace_back(n, -1);
    for (int j = 1; j <= n; ++j) {
      WeylElement next = elems_[head] * simple_[j - 1];
      auto [it, fresh] = index_.emplace(next.flat(), static_cast<int>(elems_.size()));
      if (fresh) {
        elems_.push_back(std::move(next));
        len_.push_back(len_[head] + 1);
        std::vector<int> w = words_[head];
        w.push_back(j);
        words_.push_back(std::move(w));
      }
      rmult_[head][j - 1] = it->second;
    }
  }
  if (static_cast<long long>(elems_.size()) != order)
    throw std::logic_error("group enumeration does not match the order formula");

  // Reflection matrices for all positive roots, then the cover relation.
  const auto& pos = rs_.positive_roots();
  std::vector<WeylElement> refl;
  refl.reserve(pos.size());
  for (const RootVector& beta : pos) {
    const long long bb = rs_.inner(beta, beta);
    std::vector<RootVector> cols;
    for (int i = 1; i <= n; ++i) {
      RootVector a = RootVector::simple(n, i);
      long long c2 = 2 * rs_.inner(a, beta);
      if (c2 % bb != 0) throw std::logic_error("coroot pairing is not integral");
      long long c = c2 / bb;
      std::vector<int> col = a.coeffs();
      for (int k = 0; k < n; ++k) col[k] -= static_cast<int>(c) * beta.coeffs()[k];
      cols.push_back(RootVector(std::move(col)));
    }
    refl.push_back(WeylElement::from_columns(n, cols));
  }
  covers_.resize(elems_.size());
  for (size_t v = 0; v < elems_.size(); ++v) {
    for (size_t b = 0; b < refl.size(); ++b) {
      int w = index_of(elems_[v] * refl[b]);
      if (w >= 0 && len_[w] == len_[v] + 1)
        covers_[v].emplace_back(w, static_cast<int>(b));
    }
  }
}

int WeylGroup::index_of(const WeylElement& e) const {
  auto it = index_.find(e.flat());
  return it == index_.end() ? -1 : it->second;
}

bool WeylGroup::bruhat_leq(int u_idx, int w_idx) const {
  // Standard descent recursion: with s a right descent of w,
  // u <= w  iff  min(u, us) <= ws.
  while (true) {
    if (u_idx == w_idx) return true;
    if (len_[u_idx] >= len_[w_idx]) return false;
    int s = words_[w_idx].back();
    int ws = rmult_[w_idx][s - 1];
    int us = rmult_[u_idx][s - 1];
    if (len_[us] < len_[u_idx]) u_idx = us;
    w_idx = ws;
  }
}

bool WeylGroup::is_boolean(int idx) const {
  const std::vector<int>& w = words_[idx];
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

BooleanElement WeylGroup::boolean_of(int idx) const {
  if (!is_boolean(idx)) throw NotBooleanError("element is not a product of distinct reflections");
  return BooleanElement::from_reduced_word(rs_, words_[idx]);
}

int WeylGroup::index_of(const BooleanElement& b) const {
  WeylElement e = WeylElement::identity(rs_.rank());
  for (int j : b.to_reduced_word()) e = e * simple_[j - 1];
  return index_of(e);
}

RootVector WeylGroup::weight_drop(int idx, int i) const {
  // Telescoped along a reduced word processed from the right: appending s_j
  // adds <current image of omega_i, alpha_j^vee> alpha_j, and that pairing is
  // delta_{ij} minus the pairing of the accumulated drop.
  const int n = rs_.rank();
  RootVector drop = RootVector::zero(n);
  const std::vector<int>& word = words_[idx];
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int j = *it;
    long long c = (i == j) ? 1 : 0;
    for (int k = 1; k <= n; ++k) c -= static_cast<long long>(drop.coeff(k)) * rs_.cartan(k, j);
    drop.set_coeff(j, drop.coeff(j) + static_cast<int>(c));
  }
  return drop;
}

WeylGroup::ClassVector WeylGroup::chevalley_multiply(const ClassVector& f, int i) const {
  if (i < 1 || i > rs_.rank()) throw std::invalid_argument("simple root index out of range");
  const int n = rs_.rank();
  ClassVector out;
  auto add = [&](int idx, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = out.emplace(idx, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [vidx, coeff] : f) {
    RootVector drop = weight_drop(vidx, i);
    Poly dp(n);
    for (int k = 1; k <= n; ++k)
      if (drop.coeff(k) != 0) dp += Poly::variable(n, k) * drop.coeff(k);
    if (!dp.is_zero()) add(vidx, coeff * dp);
    for (auto [widx, bidx] : covers_[vidx]) {
      int c = rs_.pair_fundamental_coroot(i, rs_.positive_roots()[bidx]);
      if (c != 0) add(widx, coeff * c);
    }
  }
  return out;
}

Poly WeylGroup::chevalley_constant(const BooleanElement& u, const BooleanElement& v,
                                   const BooleanElement& w) const {
  const int n = rs_.rank();
  if (!diagram_contains(u, w) || !diagram_contains(v, w)) return Poly::zero(n);
  ClassVector f;
  f.emplace(identity_index(), Poly::one(n));
  for (int a : u.support()) f = chevalley_multiply(f, a);
  for (int b : v.support()) f = chevalley_multiply(f, b);
  int widx = index_of(w);
  if (widx < 0) throw std::logic_error("boolean element missing from the group");
  auto it = f.find(widx);
  return it == f.end() ? Poly::zero(n) : it->second;
}

}  // namespace boolsch
