#include <doctest.h>

#include <random>

#include "qaff/series.hpp"

using namespace qaff;

namespace {

LaurentPoly random_poly(std::mt19937& g, int lo, int hi, int terms) {
  std::uniform_int_distribution<int> e(lo, hi), c(-5, 5), d(1, 3);
  std::vector<std::pair<int, Rational>> t;
  for (int i = 0; i < terms; ++i) t.emplace_back(e(g), Rational(c(g), d(g)));
  return LaurentPoly::from_terms(t);
}

RatFunc random_rat(std::mt19937& g) {
  LaurentPoly d;
  while (d.is_zero()) d = random_poly(g, -2, 3, 3);
  return RatFunc(random_poly(g, -3, 4, 4), d);
}

// Oracle: evaluation at rational points with plain mpq arithmetic.
Rational ev(const RatFunc& f, const Rational& x) {
  Rational d = f.den().eval(x);
  if (d == 0) throw std::domain_error("pole");
  return f.num().eval(x) / d;
}

}  // namespace

TEST_CASE("laurent ring identities") {
  LaurentPoly s = LaurentPoly::s();
  CHECK((s + 1) * (s - 1) == s * s - 1);
  CHECK(((s + 1) * (s - 1)).to_string() == "-1 + s^2");
  CHECK((s + s.bar()).bar() == s + s.bar());
  CHECK(LaurentPoly::s(2).bar() == LaurentPoly::s(-2));

  std::mt19937 g(7);
  for (int it = 0; it < 50; ++it) {
    auto a = random_poly(g, -3, 5, 4), b = random_poly(g, -3, 5, 4), c = random_poly(g, -2, 2, 3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    for (Rational x : {Rational(2), Rational(-3, 2)}) CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("laurent gcd") {
  LaurentPoly s = LaurentPoly::s();
  LaurentPoly a = (s - 2) * (s * s + 1) * LaurentPoly(Rational(3, 4), -2);
  LaurentPoly b = (s - 2) * (s + 5) * LaurentPoly(7);
  CHECK(gcd(a, b) == s - 2);
  CHECK(gcd(s * s + 1, s + 1).is_one());
  CHECK(gcd(LaurentPoly::s(3), s + 1).is_one());
  std::mt19937 g(11);
  for (int it = 0; it < 30; ++it) {
    auto x = random_poly(g, 0, 4, 3), y = random_poly(g, 0, 4, 3), z = random_poly(g, 0, 3, 3);
    if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
    LaurentPoly gg = gcd(x * z, y * z);
    CHECK(divides(z.monic_normal(), gg));
    CHECK(divides(gg, x * z));
    CHECK(divides(gg, y * z));
  }
}

TEST_CASE("ratfunc field axioms against evaluation") {
  std::mt19937 g(3);
  for (int it = 0; it < 40; ++it) {
    RatFunc a = random_rat(g), b = random_rat(g), c = random_rat(g);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.den().low() == 0);
    CHECK(a.den().leading() == 1);
    for (Rational x : {Rational(3), Rational(-5, 7), Rational(11, 2)}) {
      Rational va, vb;
      try {
        va = ev(a, x);
        vb = ev(b, x);
      } catch (...) {
        continue;
      }
      CHECK(ev(a + b, x) == va + vb);
      CHECK(ev(a * b, x) == va * vb);
    }
  }
  RatFunc s = RatFunc::s();
  CHECK((s + 1) / (s + 1) == RatFunc(1));
  CHECK_THROWS_WITH(RatFunc(1) / RatFunc(0), "zero divisor");
  CHECK(RatFunc::qint(2, 1) == s + s.inverse());
  CHECK(RatFunc::neg_q(3) == -RatFunc::s(6));
  CHECK(RatFunc::neg_s(3) == -RatFunc::s(3));
}

TEST_CASE("birat canonical form") {
  BiRat z = BiRat::z();
  RatFunc q = RatFunc::s(2);
  BiRat f = (BiRat(RatFunc(1) - q)) / (z - BiRat(q));
  CHECK(f.to_string() == "(1 - s^2)/(z - s^2)");
  CHECK(((z - BiRat(q)) / (z - BiRat(q))).is_one());
  BiRat h = (z * z - BiRat(RatFunc::s(4))) / (z - BiRat(RatFunc::s(2)));
  CHECK(h.to_string() == "z + s^2");
  CHECK(h.den() == ZPoly(1));
  // content extraction
  ZPoly p = ZPoly(RatFunc::s(2), 1) - ZPoly(RatFunc::s(3));
  auto [c, pp] = content_primitive(p);
  CHECK(c == RatFunc::s(2));
  CHECK(pp == ZPoly::z() - ZPoly(RatFunc::s(1)));
  // arithmetic vs evaluation
  BiRat a = (z + BiRat(RatFunc::s(1))) / (z * z - BiRat(RatFunc::s(-3)));
  BiRat b = BiRat(RatFunc::s(2) + 1) / (z - 1);
  RatFunc z0 = RatFunc(7) / 3;
  CHECK((a + b).eval(z0) == a.eval(z0) + b.eval(z0));
  CHECK((a * b).eval(z0) == a.eval(z0) * b.eval(z0));
  CHECK(((a / b) * b) == a);
  CHECK(a.subst_inverse().subst_inverse() == a);
  CHECK(a.bar().bar() == a);
  CHECK(a.subst_scale(RatFunc::s(2)).eval(z0) == a.eval(z0 * RatFunc::s(2)));
}

TEST_CASE("strip_units") {
  RatFunc q = RatFunc::s(2);
  ZPoly z = ZPoly::z();
  ZPoly p = ZPoly(q * q, 3) * (z - ZPoly(q));
  CHECK(strip_units(p) == z - ZPoly(q));
  ZPoly r = ZPoly::z(-1) - ZPoly(q, -2);
  CHECK(strip_units(r) == z - ZPoly(q));
  CHECK(strip_units(strip_units(p)) == strip_units(p));
  CHECK(strip_units(ZPoly(RatFunc(5) / 3, -4) * p) == strip_units(p));
  CHECK_THROWS(strip_units(ZPoly()));
}

TEST_CASE("pochhammer series against the functional recursion") {
  // Oracle: f(z) = (1 - x z) f(Q z), solved coefficient by coefficient:
  // c_k (1 - Q^k) = -x Q^{k-1} c_{k-1}.
  auto oracle = [](int m, bool neg, int step, int M) {
    std::vector<RatFunc> c(M + 1);
    c[0] = RatFunc(1);
    RatFunc x = RatFunc::s(m) * RatFunc(neg ? -1 : 1);
    for (int k = 1; k <= M; ++k) c[k] = -x * RatFunc::s(step * (k - 1)) * c[k - 1] / (RatFunc(1) - RatFunc::s(step * k));
    return c;
  };
  for (int m : {0, 1, 3, -2})
    for (bool neg : {false, true})
      for (int step : {2, 3, 12}) {
        auto ps = pochhammer_series(m, neg, step, 6);
        auto oc = oracle(m, neg, step, 6);
        for (int k = 0; k <= 6; ++k) CHECK(ps[k] == oc[k]);
      }
  auto p0 = pochhammer_series(0, false, 2, 0);
  CHECK(p0.order() == 0);
  CHECK(p0[0] == RatFunc(1));
  RatFunc q = RatFunc::s(2);
  auto p2 = pochhammer_series(0, false, 2, 2);
  CHECK(p2[1] == RatFunc(-1) / (RatFunc(1) - q));
  CHECK(p2[2] == q / ((RatFunc(1) - q) * (RatFunc(1) - q * q)));

  // functional equation on the series itself
  auto f = pochhammer_series(3, true, 4, 8);
  PowerSeries lin(8);
  lin[0] = RatFunc(1);
  lin[1] = RatFunc::s(3);  // 1 - (-s^3) z
  CHECK(f == (lin * f.subst_scale(RatFunc::s(4))));
}

TEST_CASE("power series inverse and rational expansion") {
  ZPoly z = ZPoly::z();
  ZPoly den = ZPoly(1) - ZPoly(RatFunc::s(2), 1);
  auto ps = PowerSeries::from_rational(ZPoly(1), den, 5);
  for (int k = 0; k <= 5; ++k) CHECK(ps[k] == RatFunc::s(2 * k));
  auto one = ps * ps.inverse();
  CHECK(one == PowerSeries::one(5));
}

TEST_CASE("modular evaluation") {
  RatFunc f = (RatFunc::s(3) + 2) / (RatFunc::s(1) - 5);
  Fp x(17);
  CHECK(eval_mod(f, x) == (x.pow(3) + Fp(2)) / (x - Fp(5)));
  CHECK_THROWS(eval_mod(f, Fp(5)));
}
