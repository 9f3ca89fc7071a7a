#include "boolsch/kostant_kumar.hpp"

#include <stdexcept>

namespace boolsch {

Poly apply_simple(const RootSystem& rs, int j, const Poly& p) {
  const int n = rs.rank();
  if (j < 1 || j > n) throw std::invalid_argument("simple root index out of range");
  if (p.nvars() != n) throw std::invalid_argument("polynomial arity mismatch");

  // Images of the variables: alpha_j -> -alpha_j, and for i != j
  // alpha_i -> alpha_i + edge_mult(i, j) alpha_j.
  std::vector<Poly> image;
  image.reserve(n);
  for (int i = 1; i <= n; ++i) {
    if (i == j) {
      image.push_back(Poly::variable(n, j) * -1);
    } else {
      Poly q = Poly::variable(n, i);
      int m = rs.edge_mult(i, j);
      if (m != 0) q += Poly::variable(n, j) * m;
      image.push_back(std::move(q));
    }
  }

  std::vector<std::vector<Poly>> powers(n);  // powers[i] = [1, img, img^2, ...]
  auto power = [&](int i, int e) -> const Poly& {
    auto& tab = powers[i];
    if (tab.empty()) tab.push_back(Poly::one(n));
    while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * image[i]);
    return tab[e];
  };

  Poly out(n);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

Poly divided_difference(const RootSystem& rs, int j, const Poly& p) {
  Poly diff = apply_simple(rs, j, p);
  diff -= p;
  // s_j p - p is divisible by alpha_j termwise: monomials free of alpha_j
  // cancel between the two sides.
  Poly out(p.nvars());
  for (const auto& [e, c] : diff.terms()) {
    if (e[j - 1] < 1) throw std::logic_error("divided difference: non-exact division");
    Poly::Exponents f = e;
    --f[j - 1];
    out.add_term(f, c);
  }
  return out;
}

Poly kk_constant(const RootSystem& rs, const BooleanElement& u, const BooleanElement& v,
                 const BooleanElement& w, const std::vector<int>& word_of_w) {
  if (!(BooleanElement::from_reduced_word(rs, word_of_w) == w))
    throw std::invalid_argument("word does not represent the target element");
  for (int i : u.support())
    if (!w.in_support(i))
      throw std::invalid_argument("supp(u) is not inside supp(w)");
  for (int i : v.support())
    if (!w.in_support(i))
      throw std::invalid_argument("supp(v) is not inside supp(w)");

  Poly p = Poly::one(rs.rank());
  for (auto it = word_of_w.rbegin(); it != word_of_w.rend(); ++it) {
    const int j = *it;
    const bool in_u = u.in_support(j), in_v = v.in_support(j);
    if (in_u && in_v)
      p = Poly::variable(rs.rank(), j) * apply_simple(rs, j, p);
    else if (in_u || in_v)
      p = apply_simple(rs, j, p);
    else
      p = divided_difference(rs, j, p);
  }
  return p;
}

Poly kk_constant(const RootSystem& rs, const BooleanElement& u, const BooleanElement& v,
                 const BooleanElement& w) {
  return kk_constant(rs, u, v, w, w.to_reduced_word());
}

}  // namespace boolsch
