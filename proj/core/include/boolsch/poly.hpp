#pragma once

// Sparse multivariate polynomials over the integers, keyed by exponent
// vectors.  One representation serves both uses in this library: weight
// polynomials in the torus variables t_1..t_n and root polynomials in the
// simple roots a_1..a_n.  The identification t_i = alpha_i is exact, so
// values coming from the two sides compare directly.

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace boolsch {

class Poly {
 public:
  using Exponents = std::vector<int>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, long long c);
  static Poly one(int nvars) { return constant(nvars, 1); }
  static Poly variable(int nvars, int i);  // 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  long long constant_term() const;
  long long coeff(const Exponents& e) const;
  const std::map<Exponents, long long>& terms() const { return terms_; }

  void add_term(const Exponents& e, long long c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(long long c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(long long c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // arbitrary total order, for map keys

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int degree) const;
  bool has_nonnegative_coeffs() const;

  // Compact human-readable form, e.g. "2t2+2t3+t4"; exponents > 1 print
  // as t2^3.  Intended for logs and error messages, not for parsing.
  std::string str(std::string_view var_prefix = "t") const;

 private:
  int nvars_;
  std::map<Exponents, long long> terms_;  // never stores zero coefficients
};

}  // namespace boolsch
