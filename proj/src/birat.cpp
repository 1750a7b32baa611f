#include "qaff/birat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qaff {

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(const RatFunc& c, int e) {
  if (!c.is_zero()) t_.emplace_back(e, c);
}

ZPoly ZPoly::from_terms(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  ZPoly r;
  for (auto& [e, c] : t) {
    if (!r.t_.empty() && r.t_.back().first == e)
      r.t_.back().second += c;
    else
      r.t_.emplace_back(e, std::move(c));
    if (r.t_.back().second.is_zero()) r.t_.pop_back();
  }
  return r;
}

RatFunc ZPoly::coeff(int e) const {
  for (const auto& [k, c] : t_)
    if (k == e) return c;
  return RatFunc(0);
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& tc : r.t_) tc.second = -tc.second;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
      out.push_back(std::move(t_[i++]));
    } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
      out.push_back(o.t_[j++]);
    } else {
      RatFunc c = t_[i].second + o.t_[j].second;
      if (!c.is_zero()) out.emplace_back(t_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) { return *this += -o; }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  int lo = a.low() + b.low(), hi = a.high() + b.high();
  std::vector<RatFunc> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  ZPoly r;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (!acc[k].is_zero()) r.t_.emplace_back(lo + static_cast<int>(k), std::move(acc[k]));
  return r;
}

ZPoly ZPoly::scaled(const RatFunc& c) const {
  if (c.is_zero()) return {};
  ZPoly r = *this;
  for (auto& tc : r.t_) tc.second *= c;
  return r;
}

ZPoly ZPoly::shifted(int k) const {
  ZPoly r = *this;
  for (auto& tc : r.t_) tc.first += k;
  return r;
}

ZPoly ZPoly::subst_scale(const RatFunc& c) const {
  ZPoly r = *this;
  for (auto& tc : r.t_) tc.second *= c.pow(tc.first);
  return r;
}

ZPoly ZPoly::subst_inverse() const {
  ZPoly r;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) r.t_.emplace_back(-it->first, it->second);
  return r;
}

ZPoly ZPoly::bar() const {
  ZPoly r = *this;
  for (auto& tc : r.t_) tc.second = tc.second.bar();
  return r;
}

RatFunc ZPoly::eval(const RatFunc& z0) const {
  RatFunc acc(0);
  if (is_zero()) return acc;
  // Horner from the top, then multiply by z0^low
  int prev = high();
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (prev != it->first) acc *= z0.pow(prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * z0.pow(low());
}

Fp ZPoly::eval_mod(Fp qs, Fp z) const {
  Fp acc(0);
  for (const auto& [e, c] : t_) acc += qaff::eval_mod(c, qs) * z.pow_signed(e);
  return acc;
}

ZPoly ZPoly::monic() const {
  if (is_zero()) throw std::domain_error("zero divisor");
  return shifted(-low()).scaled(leading().inverse());
}

std::size_t ZPoly::weight() const {
  std::size_t w = 0;
  for (const auto& tc : t_) w += tc.second.weight();
  return w;
}

std::string ZPoly::to_string() const {
  return BiRat(*this).to_string();
}

std::pair<ZPoly, ZPoly> divmod(const ZPoly& a0, const ZPoly& b0) {
  if (b0.is_zero()) throw std::domain_error("zero divisor");
  if (a0.is_zero()) return {ZPoly(), ZPoly()};
  ZPoly a = a0.shifted(-a0.low()), b = b0.shifted(-b0.low());
  int db = b.high();
  RatFunc inv = b.leading().inverse();
  std::vector<ZPoly::Term> q;
  while (!a.is_zero() && a.high() >= db) {
    int e = a.high() - db;
    RatFunc c = a.leading() * inv;
    q.emplace_back(e, c);
    a -= b.scaled(c).shifted(e);
  }
  return {ZPoly::from_terms(q), a};
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.is_zero()) return {};
  if (b.is_monomial()) return a.scaled(b.leading().inverse()).shifted(-b.low());
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact division in z");
  return q.shifted(a.low() - b.low());
}

namespace {

// Probe points for q_s; a vanishing leading coefficient just skips the probe.
const Fp kProbe[] = {Fp(1234567891), Fp(987654321987), Fp(31415926535)};

int gcd_degree_probe(const ZPoly& a, const ZPoly& b) {
  int best = 1 << 30;
  for (Fp x : kProbe) {
    try {
      auto red = [&](const ZPoly& p) {
        std::vector<Fp> v(static_cast<std::size_t>(p.high() - p.low() + 1), Fp(0));
        for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e - p.low())] = eval_mod(c, x);
        return v;
      };
      auto u = red(a), w = red(b);
      if (u.back().is_zero() || w.back().is_zero()) continue;
      while (!w.empty()) {
        Fp inv = w.back().inverse();
        while (!u.empty() && u.size() >= w.size()) {
          Fp c = u.back() * inv;
          std::size_t off = u.size() - w.size();
          for (std::size_t k = 0; k < w.size(); ++k) u[off + k] -= c * w[k];
          while (!u.empty() && u.back().is_zero()) u.pop_back();
        }
        std::swap(u, w);
      }
      best = std::min(best, static_cast<int>(u.size()) - 1);
      if (best == 0) return 0;
    } catch (const std::domain_error&) {
    }
  }
  return best;
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero()) return b0.monic();
  if (b0.is_zero()) return a0.monic();
  ZPoly a = a0.monic(), b = b0.monic();
  if (a.high() == 0 || b.high() == 0) return ZPoly(1);
  if (a == b) return a;
  if (gcd_degree_probe(a, b) == 0) return ZPoly(1);
  if (a.high() < b.high()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

ZPoly strip_units(const ZPoly& p) {
  if (p.is_zero()) throw std::domain_error("strip_units of zero");
  return p.monic();
}

// ---------------------------------------------------------------- BiRat

namespace {

void canon(ZPoly& n, ZPoly& d) {
  if (d.is_zero()) throw std::domain_error("zero divisor");
  if (n.is_zero()) {
    d = ZPoly(1);
    return;
  }
  if (d.is_monomial()) {
    n = n.scaled(d.leading().inverse()).shifted(-d.low());
    d = ZPoly(1);
    return;
  }
  RatFunc inv = d.leading().inverse();
  int k = d.low();
  d = d.shifted(-k).scaled(inv);
  n = n.shifted(-k).scaled(inv);
  ZPoly g = gcd(n, d);
  if (g != ZPoly(1)) {
    n = exact_div(n, g);
    d = exact_div(d, g);
  }
}

}  // namespace

BiRat::BiRat(const ZPoly& n, const ZPoly& d) : num_(n), den_(d) { canon(num_, den_); }

BiRat BiRat::operator-() const { return raw(-num_, den_); }

BiRat& BiRat::operator+=(const BiRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    ZPoly n = num_ + o.num_, d = den_;
    if (d == ZPoly(1)) {
      num_ = std::move(n);
      return *this;
    }
    canon(n, d);
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
  }
  ZPoly g = gcd(den_, o.den_);
  ZPoly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
  ZPoly n = num_ * d1 + o.num_ * b1;
  ZPoly d = b1 * d1 * g;
  canon(n, d);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

BiRat& BiRat::operator-=(const BiRat& o) { return *this += -o; }

BiRat& BiRat::operator*=(const BiRat& o) {
  if (is_zero() || o.is_zero()) return *this = BiRat(0);
  ZPoly one(1);
  if (den_ == one && o.den_ == one) {
    num_ = num_ * o.num_;
    return *this;
  }
  ZPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (d != one) {
    ZPoly g = gcd(a, d);
    if (g != one) {
      a = exact_div(a, g);
      d = exact_div(d, g);
    }
  }
  if (b != one) {
    ZPoly g = gcd(c, b);
    if (g != one) {
      c = exact_div(c, g);
      b = exact_div(b, g);
    }
  }
  ZPoly n = a * c, dd = b * d;
  if (dd.is_monomial()) {
    n = n.scaled(dd.leading().inverse()).shifted(-dd.low());
    dd = one;
  } else {
    RatFunc inv = dd.leading().inverse();
    int k = dd.low();
    n = n.shifted(-k).scaled(inv);
    dd = dd.shifted(-k).scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(dd);
  return *this;
}

BiRat BiRat::inverse() const {
  if (is_zero()) throw std::domain_error("zero divisor");
  ZPoly n = den_, d = num_;
  if (d.is_monomial()) {
    n = n.scaled(d.leading().inverse()).shifted(-d.low());
    return raw(n, ZPoly(1));
  }
  RatFunc inv = d.leading().inverse();
  int k = d.low();
  return raw(n.shifted(-k).scaled(inv), d.shifted(-k).scaled(inv));
}

BiRat& BiRat::operator/=(const BiRat& o) { return *this *= o.inverse(); }

BiRat BiRat::subst_scale(const RatFunc& c) const { return BiRat(num_.subst_scale(c), den_.subst_scale(c)); }
BiRat BiRat::subst_inverse() const { return BiRat(num_.subst_inverse(), den_.subst_inverse()); }
BiRat BiRat::bar() const { return BiRat(num_.bar(), den_.bar()); }

RatFunc BiRat::eval(const RatFunc& z0) const {
  RatFunc d = den_.eval(z0);
  if (d.is_zero()) throw std::domain_error("zero divisor");
  return num_.eval(z0) / d;
}

Fp BiRat::eval_mod(Fp qs, Fp z) const {
  Fp d = den_.eval_mod(qs, z);
  if (d.is_zero()) throw std::domain_error("zero divisor");
  return num_.eval_mod(qs, z) / d;
}

// ---------------------------------------------------------------- printing

namespace {

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return exact_div(a * b, gcd(a, b)).monic_normal();
}

LaurentPoly coeff_denominator_lcm(const ZPoly& p, LaurentPoly acc) {
  for (const auto& tc : p.terms()) acc = lcm(acc, tc.second.den());
  return acc;
}

// coefficient * L as polynomials in s, keyed by z-degree
std::vector<std::pair<int, LaurentPoly>> cleared(const ZPoly& p, const LaurentPoly& L) {
  std::vector<std::pair<int, LaurentPoly>> out;
  for (const auto& [e, c] : p.terms()) out.emplace_back(e, exact_div(c.num() * L, c.den()));
  return out;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  Integer n, d;
  mpz_gcd(n.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  return Rational(n, d);
}

}  // namespace

std::vector<BivariateTerm> to_bivariate(const ZPoly& p, const LaurentPoly& L) {
  std::vector<BivariateTerm> out;
  for (const auto& [e, poly] : cleared(p, L))
    for (const auto& [se, c] : poly.terms()) out.push_back({e, se, c});
  return out;
}

std::string bivariate_string(std::vector<BivariateTerm> t) {
  if (t.empty()) return "0";
  std::sort(t.begin(), t.end(), [](const BivariateTerm& a, const BivariateTerm& b) {
    return a.z != b.z ? a.z > b.z : a.s < b.s;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [ze, se, c] : t) {
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::string m;
    auto app = [&m](const std::string& v, int e) {
      if (e == 0) return;
      if (!m.empty()) m += "*";
      m += v;
      if (e != 1) m += "^" + std::to_string(e);
    };
    app("s", se);
    app("z", ze);
    if (m.empty())
      os << rational_string(a);
    else if (a == 1)
      os << m;
    else
      os << rational_string(a) << "*" << m;
  }
  return os.str();
}

std::string BiRat::to_string() const {
  if (is_zero()) return "0";
  LaurentPoly L = coeff_denominator_lcm(den_, coeff_denominator_lcm(num_, LaurentPoly(1)));
  auto N = cleared(num_, L), D = cleared(den_, L);
  LaurentPoly G;
  for (const auto& x : N) G = gcd(G, x.second);
  for (const auto& x : D) G = gcd(G, x.second);
  int shift = 1 << 30;
  for (auto& x : D) {
    x.second = exact_div(x.second, G);
    shift = std::min(shift, x.second.low());
  }
  for (auto& x : N) x.second = exact_div(x.second, G);
  Rational lead = D.back().second.leading();
  std::vector<BivariateTerm> nt, dt;
  for (const auto& [e, poly] : N)
    for (const auto& [se, c] : poly.terms()) nt.push_back({e, se - shift, c / lead});
  for (const auto& [e, poly] : D)
    for (const auto& [se, c] : poly.terms()) dt.push_back({e, se - shift, c / lead});
  std::string ns = bivariate_string(nt);
  if (dt.size() == 1 && dt[0].z == 0 && dt[0].s == 0) return ns;
  if (nt.size() > 1) ns = "(" + ns + ")";
  std::string ds = bivariate_string(dt);
  if (dt.size() > 1) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::pair<RatFunc, ZPoly> content_primitive(const ZPoly& p) {
  if (p.is_zero()) throw std::domain_error("content of zero");
  LaurentPoly L = coeff_denominator_lcm(p, LaurentPoly(1));
  auto C = cleared(p, L);
  LaurentPoly G;
  for (const auto& x : C) G = gcd(G, x.second);
  int lo = 1 << 30;
  for (auto& x : C) {
    x.second = exact_div(x.second, G);
    lo = std::min(lo, x.second.low());
  }
  Rational rc = 0;
  for (const auto& x : C) rc = rc == 0 ? abs(x.second.scale()) : rational_gcd(rc, x.second.scale());
  Rational lead = C.back().second.leading();
  if (lead < 0) rc = -rc;
  std::vector<ZPoly::Term> t;
  for (auto& [e, poly] : C) {
    LaurentPoly q = poly.shifted(-lo);
    q *= Rational(1) / rc;
    t.emplace_back(e, RatFunc(q));
  }
  ZPoly prim = ZPoly::from_terms(t);
  RatFunc cont = RatFunc(G.shifted(lo) * rc, L);
  return {cont, prim};
}

}  // namespace qaff
