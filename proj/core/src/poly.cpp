#include "boolsch/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace boolsch {

Poly Poly::constant(int nvars, long long c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[i - 1] = 1;
  p.terms_[e] = 1;
  return p;
}

long long Poly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? 0 : it->second;
}

long long Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Exponents& e, long long c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(long long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly r(nvars_);
  Exponents e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Poly Poly::operator*(long long c) const {
  Poly r = *this;
  r *= c;
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Poly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  return true;
}

bool Poly::has_nonnegative_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string Poly::str(std::string_view var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Reverse map order prints low-index variables first and constants last,
  // the way the polynomials are usually written out.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    long long a = c;
    if (!out.empty()) {
      out += (a < 0) ? "-" : "+";
      if (a < 0) a = -a;
    } else if (a < 0) {
      out += "-";
      a = -a;
    }
    bool monic = true;
    std::string vars;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      monic = false;
      vars += var_prefix;
      vars += std::to_string(k + 1);
      if (e[k] > 1) vars += "^" + std::to_string(e[k]);
    }
    if (monic || a != 1) out += std::to_string(a);
    out += vars;
  }
  return out;
}

}  // namespace boolsch
