#include "boolsch/boolean_element.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "boolsch/errors.hpp"

namespace boolsch {

BooleanElement make_element_unchecked(std::vector<int> support_sorted,
                                      std::vector<std::pair<int, int>> edges_sorted) {
  BooleanElement b;
  b.support_ = std::move(support_sorted);
  b.edges_ = std::move(edges_sorted);
  return b;
}

BooleanElement BooleanElement::from_reduced_word(const RootSystem& rs,
                                                 const std::vector<int>& word) {
  BooleanElement b;
  std::vector<int> pos(rs.rank() + 1, -1);
  for (size_t p = 0; p < word.size(); ++p) {
    int i = word[p];
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument("word letter " + std::to_string(i) + " out of range");
    if (pos[i] != -1) throw NotBooleanError("word repeats letter " + std::to_string(i));
    pos[i] = static_cast<int>(p);
    b.support_.push_back(i);
  }
  std::sort(b.support_.begin(), b.support_.end());
  for (int j : b.support_) {
    for (int k : rs.neighbors(j)) {
      if (pos[k] == -1) continue;
      // Arrow from the later letter to the earlier one, recorded once per pair.
      if (pos[j] < pos[k]) b.edges_.emplace_back(k, j);
    }
  }
  std::sort(b.edges_.begin(), b.edges_.end());
  return b;
}

BooleanElement BooleanElement::from_diagram(const RootSystem& rs, std::vector<int> support,
                                            std::vector<std::pair<int, int>> edges) {
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw std::invalid_argument("support has a repeated index");
  for (int i : support)
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument("support index " + std::to_string(i) + " out of range");

  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");

  auto in = [&](int i) { return std::binary_search(support.begin(), support.end(), i); };
  // The edge set must orient exactly the Dynkin-adjacent pairs in the support.
  size_t expected = 0;
  for (int a : support)
    for (int nb : rs.neighbors(a))
      if (nb > a && in(nb)) ++expected;
  if (edges.size() != expected)
    throw std::invalid_argument("edge set does not match the induced subdiagram");
  for (auto [f, t] : edges) {
    if (!in(f) || !in(t) || !rs.adjacent(f, t))
      throw std::invalid_argument("edge (" + std::to_string(f) + "," + std::to_string(t) +
                                  ") is not an induced Dynkin pair");
    if (std::binary_search(edges.begin(), edges.end(), std::make_pair(t, f)))
      throw std::invalid_argument("pair {" + std::to_string(f) + "," + std::to_string(t) +
                                  "} is oriented both ways");
  }
  return make_element_unchecked(std::move(support), std::move(edges));
}

bool BooleanElement::in_support(int i) const {
  return std::binary_search(support_.begin(), support_.end(), i);
}

bool BooleanElement::has_edge(int from, int to) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(from, to));
}

std::vector<int> BooleanElement::to_reduced_word() const {
  // Greedy minimal linear extension: an arrow (k, j) forces j before k, so a
  // letter is ready once all its out-neighbors are placed.  Always taking the
  // smallest ready letter yields the lexicographically least word.
  std::vector<int> word;
  std::vector<char> done(support_.empty() ? 0 : support_.back() + 1, 0);
  while (word.size() < support_.size()) {
    bool advanced = false;
    for (int i : support_) {
      if (done[i]) continue;
      bool ready = true;
      for (auto [f, t] : edges_)
        if (f == i && !done[t]) {
          ready = false;
          break;
        }
      if (ready) {
        word.push_back(i);
        done[i] = 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("arrow order has a cycle");
  }
  return word;
}

std::vector<int> BooleanElement::accessible_from(int i) const {
  if (!in_support(i)) throw std::invalid_argument("accessible_from: index not in support");
  std::vector<int> reach{i};
  std::vector<int> queue{i};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (auto [f, t] : edges_) {
      if (f != x) continue;
      if (std::find(reach.begin(), reach.end(), t) == reach.end()) {
        reach.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::sort(reach.begin(), reach.end());
  return reach;
}

bool diagram_contains(const BooleanElement& inner, const BooleanElement& outer) {
  if (!std::includes(outer.support().begin(), outer.support().end(),
                     inner.support().begin(), inner.support().end()))
    return false;
  return std::includes(outer.edges().begin(), outer.edges().end(),
                       inner.edges().begin(), inner.edges().end());
}

BooleanElement restrict_diagram(const BooleanElement& w, const std::vector<int>& sub_support) {
  std::vector<int> s = sub_support;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("restriction support has a repeated index");
  for (int i : s)
    if (!w.in_support(i))
      throw std::invalid_argument("restriction support is not inside the element");
  auto in = [&](int i) { return std::binary_search(s.begin(), s.end(), i); };
  std::vector<std::pair<int, int>> edges;
  for (auto [f, t] : w.edges())
    if (in(f) && in(t)) edges.emplace_back(f, t);
  return make_element_unchecked(std::move(s), std::move(edges));
}

std::vector<BooleanElement> subdiagrams(const BooleanElement& w) {
  const std::vector<int>& supp = w.support();
  const int m = w.length();
  std::vector<BooleanElement> out;
  out.reserve(size_t{1} << m);
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < m; ++k)
      if (mask & (1UL << k)) s.push_back(supp[k]);
    out.push_back(restrict_diagram(w, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BooleanElement> enumerate_boolean(const RootSystem& rs) {
  const int n = rs.rank();
  // Supports ordered by size then lexicographically.
  std::vector<std::vector<int>> supports;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1UL << (i - 1))) s.push_back(i);
    supports.push_back(std::move(s));
  }
  std::stable_sort(supports.begin(), supports.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });

  std::vector<BooleanElement> out;
  for (const auto& s : supports) {
    std::vector<std::pair<int, int>> pairs;  // unordered, min < max, lex sorted
    for (int a : s)
      for (int nb : rs.neighbors(a))
        if (nb > a && std::binary_search(s.begin(), s.end(), nb)) pairs.emplace_back(a, nb);
    std::sort(pairs.begin(), pairs.end());
    const size_t e = pairs.size();
    for (unsigned long bits = 0; bits < (1UL << e); ++bits) {
      std::vector<std::pair<int, int>> edges;
      for (size_t k = 0; k < e; ++k) {
        auto [a, b] = pairs[k];
        if (bits & (1UL << k))
          edges.emplace_back(b, a);
        else
          edges.emplace_back(a, b);
      }
      std::sort(edges.begin(), edges.end());
      out.push_back(make_element_unchecked(s, std::move(edges)));
    }
  }
  return out;
}

std::vector<std::vector<int>> all_reduced_words(const BooleanElement& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  std::vector<char> done(b.support().empty() ? 1 : b.support().back() + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (word.size() == b.support().size()) {
      out.push_back(word);
      return;
    }
    for (int i : b.support()) {
      if (done[i]) continue;
      bool ready = true;
      for (auto [f, t] : b.edges())
        if (f == i && !done[t]) {
          ready = false;
          break;
        }
      if (!ready) continue;
      done[i] = 1;
      word.push_back(i);
      self(self);
      word.pop_back();
      done[i] = 0;
    }
  };
  rec(rec);
  return out;
}

}  // namespace boolsch
