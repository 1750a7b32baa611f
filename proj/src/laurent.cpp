#include "qaff/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaff {

namespace {

void trim(ZDense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce_mod(const ZDense& a, u64 p) {
  std::vector<u64> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  return r;
}

// a := a / b over Z, lazily scaled pseudo-remainder, then made primitive.
ZDense prem_primitive(ZDense r, const ZDense& b) {
  const std::size_t n = b.size() - 1;
  const Integer& lc = b[n];
  Integer g, mr, mb;
  while (!r.empty() && r.size() - 1 >= n) {
    std::size_t d = r.size() - 1;
    Integer c = r[d];
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
    mpz_divexact(mr.get_mpz_t(), lc.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(mb.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (mr != 1)
      for (auto& x : r) x *= mr;
    for (std::size_t k = 0; k <= n; ++k) mpz_submul(r[d - n + k].get_mpz_t(), mb.get_mpz_t(), b[k].get_mpz_t());
    trim(r);
    if (!r.empty()) {
      Integer ct = content(r);
      if (ct != 1)
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ct.get_mpz_t());
    }
  }
  return r;
}

bool try_divexact(const ZDense& a, const ZDense& b, ZDense& q) {
  if (b.empty()) throw std::domain_error("zero divisor");
  if (a.empty()) {
    q.clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZDense r = a;
  std::size_t n = b.size() - 1;
  q.assign(a.size() - n, Integer(0));
  for (std::size_t d = r.size() - 1;; --d) {
    if (r[d] != 0) {
      if (!mpz_divisible_p(r[d].get_mpz_t(), b[n].get_mpz_t())) return false;
      Integer c;
      mpz_divexact(c.get_mpz_t(), r[d].get_mpz_t(), b[n].get_mpz_t());
      for (std::size_t k = 0; k <= n; ++k) mpz_submul(r[d - n + k].get_mpz_t(), c.get_mpz_t(), b[k].get_mpz_t());
      q[d - n] = c;
    }
    if (d == n) break;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (r[i] != 0) return false;
  return true;
}

void make_primitive(ZDense& p) {
  if (p.empty()) return;
  Integer c = content(p);
  if (p.back() < 0) c = -c;
  if (c != 1)
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

constexpr u64 kPrimes[] = {4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL};

}  // namespace

Integer content(const ZDense& p) {
  Integer g = 0;
  for (const auto& x : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZDense zd_mul(const ZDense& a, const ZDense& b) {
  if (a.empty() || b.empty()) return {};
  ZDense r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

ZDense zd_divexact(const ZDense& a, const ZDense& b) {
  ZDense q;
  if (!try_divexact(a, b, q)) throw std::domain_error("inexact polynomial division");
  return q;
}

int zd_gcd_degree_mod(const ZDense& a, const ZDense& b, u64 p) {
  auto x = reduce_mod(a, p);
  auto y = reduce_mod(b, p);
  if (x.empty() || y.empty() || x.back() == 0 || y.back() == 0) return -1;
  while (!y.empty()) {
    // x mod y
    u64 inv = powmod(y.back(), p - 2, p);
    while (!x.empty() && x.size() >= y.size()) {
      u64 c = mulmod(x.back(), inv, p);
      std::size_t off = x.size() - y.size();
      for (std::size_t k = 0; k < y.size(); ++k) {
        u64 t = mulmod(c, y[k], p);
        x[off + k] = x[off + k] >= t ? x[off + k] - t : x[off + k] + p - t;
      }
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

ZDense zd_gcd(const ZDense& a0, const ZDense& b0) {
  if (a0.empty()) {
    ZDense b = b0;
    make_primitive(b);
    return b;
  }
  if (b0.empty()) {
    ZDense a = a0;
    make_primitive(a);
    return a;
  }
  if (a0.size() == 1 || b0.size() == 1) return {Integer(1)};
  int d = 1 << 30;
  for (u64 p : kPrimes) {
    int dp = zd_gcd_degree_mod(a0, b0, p);
    if (dp >= 0) d = std::min(d, dp);
    if (d == 0) return {Integer(1)};
  }
  ZDense a = a0, b = b0;
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  ZDense q;
  if (d + 1 == static_cast<int>(b.size()) && try_divexact(a, b, q)) return b;
  while (!b.empty()) {
    ZDense r = prem_primitive(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c), 0) {}

LaurentPoly::LaurentPoly(const Rational& c, int e) {
  if (c != 0) {
    prim_ = {Integer(1)};
    scale_ = c;
    low_ = e;
  }
}

void LaurentPoly::normalize(ZDense p, Rational scale, int low) {
  trim(p);
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 0) ++lead;
  if (p.empty() || scale == 0) {
    prim_.clear();
    scale_ = 0;
    low_ = 0;
    return;
  }
  if (lead) p.erase(p.begin(), p.begin() + static_cast<long>(lead));
  Integer c = content(p);
  if (p.back() < 0) c = -c;
  if (c != 1) {
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    scale *= c;
  }
  prim_ = std::move(p);
  scale_ = std::move(scale);
  scale_.canonicalize();
  low_ = low + static_cast<int>(lead);
}

LaurentPoly LaurentPoly::from_dense(const Rational& scale, int low, ZDense p) {
  LaurentPoly r;
  r.normalize(std::move(p), scale, low);
  return r;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Rational>>& t) {
  if (t.empty()) return {};
  int lo = t[0].first, hi = t[0].first;
  Integer den = 1;
  for (const auto& [e, c] : t) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  ZDense p(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (const auto& [e, c] : t) {
    Integer v = c.get_num() * (den / c.get_den());
    p[static_cast<std::size_t>(e - lo)] += v;
  }
  return from_dense(Rational(1, den), lo, std::move(p));
}

Rational LaurentPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return 0;
  Rational r = scale_ * Rational(prim_[static_cast<std::size_t>(e - low_)]);
  return r;
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> t;
  for (std::size_t i = 0; i < prim_.size(); ++i)
    if (prim_[i] != 0) t.emplace_back(low_ + static_cast<int>(i), scale_ * Rational(prim_[i]));
  return t;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  r.scale_ = -r.scale_;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (low_ == o.low_ && prim_ == o.prim_) {
    Rational s = scale_ + o.scale_;
    if (s == 0) return *this = LaurentPoly();
    scale_ = s;
    return *this;
  }
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  Integer den;
  mpz_lcm(den.get_mpz_t(), scale_.get_den_mpz_t(), o.scale_.get_den_mpz_t());
  Integer ma = scale_.get_num() * (den / scale_.get_den());
  Integer mb = o.scale_.get_num() * (den / o.scale_.get_den());
  ZDense p(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t i = 0; i < prim_.size(); ++i)
    mpz_addmul(p[i + static_cast<std::size_t>(low_ - lo)].get_mpz_t(), ma.get_mpz_t(), prim_[i].get_mpz_t());
  for (std::size_t i = 0; i < o.prim_.size(); ++i)
    mpz_addmul(p[i + static_cast<std::size_t>(o.low_ - lo)].get_mpz_t(), mb.get_mpz_t(), o.prim_[i].get_mpz_t());
  normalize(std::move(p), Rational(1, den), lo);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.scale_ = a.scale_ * b.scale_;
  r.low_ = a.low_ + b.low_;
  if (a.is_monomial())
    r.prim_ = b.prim_;
  else if (b.is_monomial())
    r.prim_ = a.prim_;
  else
    r.prim_ = zd_mul(a.prim_, b.prim_);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) return *this = LaurentPoly();
  if (!is_zero()) scale_ *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  ZDense p(prim_.rbegin(), prim_.rend());
  return from_dense(scale_, -high(), std::move(p));
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (low_ < 0) throw std::domain_error("zero divisor");
    return low_ == 0 ? Rational(scale_ * Rational(prim_[0])) : Rational(0);
  }
  Rational acc = 0;
  for (std::size_t i = prim_.size(); i-- > 0;) acc = acc * x + Rational(prim_[i]);
  Rational m = 1;
  int e = low_;
  Rational base = e >= 0 ? x : Rational(1) / x;
  for (int k = 0; k < std::abs(e); ++k) m *= base;
  return scale_ * acc * m;
}

LaurentPoly LaurentPoly::monic_normal() const {
  if (is_zero()) throw std::domain_error("zero divisor");
  LaurentPoly r;
  r.prim_ = prim_;
  r.low_ = 0;
  r.scale_ = Rational(1) / Rational(prim_.back());
  return r;
}

namespace {
std::string mono(int e, const std::string& var) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}
}  // namespace

std::string rational_string(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::string m = mono(e, var);
    if (m.empty())
      os << rational_string(a);
    else if (a == 1)
      os << m;
    else
      os << rational_string(a) << "*" << m;
  }
  return os.str();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.monic_normal();
  if (b.is_zero()) return a.monic_normal();
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
  ZDense g = zd_gcd(a.prim(), b.prim());
  Rational sc = Rational(1) / Rational(g.back());
  return LaurentPoly::from_dense(sc, 0, std::move(g));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.is_zero()) return {};
  Rational sc = a.scale() / b.scale();
  int lo = a.low() - b.low();
  if (b.is_monomial()) return LaurentPoly::from_dense(sc, lo, a.prim());
  return LaurentPoly::from_dense(sc, lo, zd_divexact(a.prim(), b.prim()));
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero() || b.is_monomial()) return true;
  ZDense q;
  return try_divexact(a.prim(), b.prim(), q);
}

}  // namespace qaff
