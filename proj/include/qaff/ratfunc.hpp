#pragma once
// Rational functions in q_s: the scalar field of every module.

#include "qaff/laurent.hpp"

#include <string>

namespace qaff {

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFunc(const LaurentPoly& n, const LaurentPoly& d);

  static RatFunc s(int e = 1) { return RatFunc(LaurentPoly::s(e)); }
  // (-s)^e and (-s^2)^e, the twists that show up everywhere.
  static RatFunc neg_s(int e);
  static RatFunc neg_q(int e) { return neg_s(e) * neg_s(e) * RatFunc(e % 2 ? -1 : 1); }
  // q-integer [k]_{s^e} = (s^{ek} - s^{-ek}) / (s^e - s^{-e}).
  static RatFunc qint(int k, int e);
  static RatFunc qfact(int k, int e);
  static RatFunc qbinom(int n, int k, int e);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc bar() const;
  RatFunc pow(int k) const;
  // q_s-adic valuation; throws on zero.
  int valuation() const;
  // Rough size used to prefer cheap pivots.
  std::size_t weight() const { return num_.prim().size() + den_.prim().size(); }

  std::string to_string(const std::string& var = "s") const;

 private:
  static RatFunc raw(LaurentPoly n, LaurentPoly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
  LaurentPoly num_, den_;
};

}  // namespace qaff
