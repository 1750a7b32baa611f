#pragma once
// Laurent polynomials in q_s over Q.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qaff {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense integer polynomial, index = exponent. Helpers used by gcd code.
using ZDense = std::vector<Integer>;

/*
 * Stored as scale * s^low * P(s) where P has integer coefficients, is
 * primitive, has positive leading coefficient and P(0) != 0. This makes the
 * representation canonical and keeps the hot loops in mpz.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  LaurentPoly(long c);      // NOLINT: constants convert implicitly
  LaurentPoly(const Rational& c, int e = 0);

  static LaurentPoly monomial(const Rational& c, int e) { return LaurentPoly(c, e); }
  static LaurentPoly s(int e = 1) { return LaurentPoly(Rational(1), e); }
  // Build from (exponent, coefficient) pairs; duplicates are summed.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Rational>>& t);
  // scale * s^low * P, P arbitrary integer poly (normalized here).
  static LaurentPoly from_dense(const Rational& scale, int low, ZDense p);

  bool is_zero() const { return prim_.empty(); }
  bool is_monomial() const { return prim_.size() == 1; }
  bool is_constant() const { return is_zero() || (is_monomial() && low_ == 0); }
  bool is_one() const { return is_monomial() && low_ == 0 && scale_ == 1; }

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(prim_.size()) - 1; }
  int span() const { return static_cast<int>(prim_.size()) - 1; }
  const Rational& scale() const { return scale_; }
  const ZDense& prim() const { return prim_; }

  Rational coeff(int e) const;
  Rational leading() const { return coeff(high()); }
  Rational trailing() const { return coeff(low()); }
  std::vector<std::pair<int, Rational>> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.scale_ == b.scale_ && a.prim_ == b.prim_;
  }

  LaurentPoly shifted(int k) const;  // * s^k
  LaurentPoly bar() const;           // s -> s^{-1}
  LaurentPoly pow(unsigned k) const;
  Rational eval(const Rational& x) const;

  // Polynomial part with low exponent 0 and leading coefficient 1.
  LaurentPoly monic_normal() const;

  std::string to_string(const std::string& var = "s") const;

 private:
  void normalize(ZDense p, Rational scale, int low);

  Rational scale_{0};
  int low_ = 0;
  ZDense prim_;
};

// Primitive integer polynomial tools.
Integer content(const ZDense& p);
ZDense zd_mul(const ZDense& a, const ZDense& b);
// Returns q with a == b*q; throws if b does not divide a over Z.
ZDense zd_divexact(const ZDense& a, const ZDense& b);
// Primitive gcd with positive leading coefficient.
ZDense zd_gcd(const ZDense& a, const ZDense& b);
// Degree of gcd(a, b) modulo a fixed prime, or -1 when the prime is bad.
int zd_gcd_degree_mod(const ZDense& a, const ZDense& b, std::uint64_t p);

// gcd as a Laurent polynomial: low 0, monic.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
// a / b, exact in Q[s, s^-1]; throws "zero divisor" on b == 0.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

std::string rational_string(const Rational& r);

}  // namespace qaff
