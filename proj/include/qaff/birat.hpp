#pragma once
// Laurent polynomials and rational functions in a spectral variable z over Q(q_s).

#include "qaff/modp.hpp"
#include "qaff/ratfunc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qaff {

class ZPoly {
 public:
  using Term = std::pair<int, RatFunc>;
  ZPoly() = default;
  ZPoly(const RatFunc& c, int e = 0);  // NOLINT
  ZPoly(long c) : ZPoly(RatFunc(c)) {}  // NOLINT
  static ZPoly z(int e = 1) { return ZPoly(RatFunc(1), e); }
  static ZPoly from_terms(std::vector<Term> t);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  bool is_constant() const { return is_zero() || (t_.size() == 1 && t_[0].first == 0); }
  int low() const { return t_.front().first; }
  int high() const { return t_.back().first; }
  const RatFunc& leading() const { return t_.back().second; }
  const RatFunc& trailing() const { return t_.front().second; }
  RatFunc coeff(int e) const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
  ZPoly scaled(const RatFunc& c) const;
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  ZPoly shifted(int k) const;
  ZPoly subst_scale(const RatFunc& c) const;  // z -> c z
  ZPoly subst_inverse() const;                // z -> 1/z
  ZPoly bar() const;                          // q_s -> 1/q_s on coefficients
  RatFunc eval(const RatFunc& z0) const;
  Fp eval_mod(Fp qs, Fp z) const;

  // low z-degree 0, leading coefficient 1
  ZPoly monic() const;
  std::size_t weight() const;

  std::string to_string() const;

 private:
  std::vector<Term> t_;  // ascending exponents, nonzero coefficients
};

// Polynomial division in the z-variable (operands shifted to low 0 first).
std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b);
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Canonical: den has low z-degree 0 and leading z-coefficient 1, gcd(num, den) = 1.
class BiRat {
 public:
  BiRat() : den_(1) {}
  BiRat(long c) : num_(c), den_(1) {}  // NOLINT
  BiRat(const RatFunc& c) : num_(c), den_(1) {}  // NOLINT
  BiRat(ZPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  BiRat(const ZPoly& n, const ZPoly& d);
  static BiRat z(int e = 1) { return BiRat(ZPoly::z(e)); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_ == ZPoly(1) && num_ == ZPoly(1); }
  bool is_poly() const { return den_.is_constant(); }

  BiRat operator-() const;
  BiRat& operator+=(const BiRat& o);
  BiRat& operator-=(const BiRat& o);
  BiRat& operator*=(const BiRat& o);
  BiRat& operator/=(const BiRat& o);
  friend BiRat operator+(BiRat a, const BiRat& b) { return a += b; }
  friend BiRat operator-(BiRat a, const BiRat& b) { return a -= b; }
  friend BiRat operator*(BiRat a, const BiRat& b) { return a *= b; }
  friend BiRat operator/(BiRat a, const BiRat& b) { return a /= b; }
  friend bool operator==(const BiRat& a, const BiRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const BiRat& a, const BiRat& b) { return !(a == b); }
  BiRat inverse() const;

  BiRat subst_scale(const RatFunc& c) const;
  BiRat subst_inverse() const;
  BiRat bar() const;
  RatFunc eval(const RatFunc& z0) const;
  Fp eval_mod(Fp qs, Fp z) const;
  std::size_t weight() const { return num_.weight() + den_.weight(); }

  // Canonical bivariate string, e.g. "(1 - s^2)/(z - s^2)".
  std::string to_string() const;

 private:
  static BiRat raw(ZPoly n, ZPoly d) {
    BiRat r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
  ZPoly num_, den_;
};

// Representative modulo units c*z^n: low z-degree 0 and leading coefficient 1.
ZPoly strip_units(const ZPoly& p);

// Bivariate integer form num(s,z)/den(s,z) for printing and hashing.
struct BivariateTerm {
  int z, s;
  Rational c;
};
std::vector<BivariateTerm> to_bivariate(const ZPoly& p, const LaurentPoly& common_den);
std::string bivariate_string(std::vector<BivariateTerm> t);

// p = content * primitive, where the primitive part has integer coefficients
// with trivial content, lowest q_s-exponent 0 and positive leading coefficient.
std::pair<RatFunc, ZPoly> content_primitive(const ZPoly& p);

}  // namespace qaff
