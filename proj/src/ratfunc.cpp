#include "qaff/ratfunc.hpp"

#include <stdexcept>

namespace qaff {

namespace {

// Split d = c*s^k*D with D monic, low 0; returns D, writes the unit into n.
void canonical(LaurentPoly& n, LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("zero divisor");
  if (n.is_zero()) {
    d = LaurentPoly(1);
    return;
  }
  if (d.is_monomial()) {
    n = LaurentPoly::from_dense(n.scale() / d.scale(), n.low() - d.low(), n.prim());
    d = LaurentPoly(1);
    return;
  }
  Rational unit = d.scale() * Rational(d.prim().back());
  int shift = d.low();
  LaurentPoly dm = d.monic_normal();
  LaurentPoly nn = LaurentPoly::from_dense(n.scale() / unit, n.low() - shift, n.prim());
  LaurentPoly g = gcd(nn, dm);
  if (!g.is_one()) {
    nn = exact_div(nn, g);
    dm = exact_div(dm, g).monic_normal();
    // exact_div preserved monicity up to the unit of g, which is monic too.
  }
  n = std::move(nn);
  d = std::move(dm);
}

}  // namespace

RatFunc::RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) { canonical(num_, den_); }

RatFunc RatFunc::neg_s(int e) {
  return RatFunc(LaurentPoly(Rational((e % 2 != 0) ? -1 : 1), e));
}

RatFunc RatFunc::qint(int k, int e) {
  if (k == 0) return RatFunc(0);
  // sum_{j=0}^{k-1} s^{e(k-1-2j)}
  int sign = 1;
  if (k < 0) {
    k = -k;
    sign = -1;
  }
  std::vector<std::pair<int, Rational>> t;
  for (int j = 0; j < k; ++j) t.emplace_back(e * (k - 1 - 2 * j), Rational(sign));
  return RatFunc(LaurentPoly::from_terms(t));
}

RatFunc RatFunc::qfact(int k, int e) {
  RatFunc r(1);
  for (int j = 2; j <= k; ++j) r *= qint(j, e);
  return r;
}

RatFunc RatFunc::qbinom(int n, int k, int e) {
  if (k < 0) return RatFunc(0);
  // general n (possibly negative) via the product formula
  RatFunc r(1);
  for (int j = 0; j < k; ++j) r *= qint(n - j, e);
  return r / qfact(k, e);
}

RatFunc RatFunc::operator-() const { return raw(-num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    LaurentPoly n = num_ + o.num_;
    LaurentPoly d = den_;
    canonical(n, d);
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  LaurentPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    LaurentPoly n = num_ * o.den_ + o.num_ * den_;
    LaurentPoly d = den_ * o.den_;
    // coprime denominators: the sum is already reduced
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  LaurentPoly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
  LaurentPoly n = num_ * d1 + o.num_ * b1;
  LaurentPoly d = b1 * d1 * g;
  canonical(n, d);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc(0);
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    LaurentPoly g = gcd(a, d);
    if (!g.is_one()) {
      a = exact_div(a, g);
      d = exact_div(d, g);
    }
  }
  if (!b.is_one()) {
    LaurentPoly g = gcd(c, b);
    if (!g.is_one()) {
      c = exact_div(c, g);
      b = exact_div(b, g);
    }
  }
  LaurentPoly n = a * c, dd = b * d;
  if (dd.is_monomial()) {
    canonical(n, dd);
  } else {
    Rational unit = dd.scale() * Rational(dd.prim().back());
    int sh = dd.low();
    n = LaurentPoly::from_dense(n.scale() / unit, n.low() - sh, n.prim());
    dd = dd.monic_normal();
  }
  num_ = std::move(n);
  den_ = std::move(dd);
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("zero divisor");
  LaurentPoly n = den_, d = num_;
  if (d.is_monomial()) {
    canonical(n, d);
    return raw(n, d);
  }
  Rational unit = d.scale() * Rational(d.prim().back());
  int sh = d.low();
  n = LaurentPoly::from_dense(n.scale() / unit, n.low() - sh, n.prim());
  return raw(n, d.monic_normal());
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

int RatFunc::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  return num_.low() - den_.low();
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  if (!num_.is_monomial()) n = "(" + n + ")";
  return n + "/(" + den_.to_string(var) + ")";
}

}  // namespace qaff
