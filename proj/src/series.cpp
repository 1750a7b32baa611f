#include "qaff/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qaff {

PowerSeries PowerSeries::one(int order) {
  PowerSeries r(order);
  r[0] = RatFunc(1);
  return r;
}

PowerSeries PowerSeries::from_rational(const ZPoly& num, const ZPoly& den, int order) {
  if (den.is_zero()) throw std::domain_error("zero divisor");
  if ((!num.is_zero() && num.low() < 0) || den.low() < 0) throw std::domain_error("not a power series");
  RatFunc d0 = den.coeff(0);
  if (d0.is_zero()) throw std::domain_error("series denominator vanishes at z = 0");
  RatFunc inv = d0.inverse();
  PowerSeries r(order);
  for (int k = 0; k <= order; ++k) {
    RatFunc acc = num.coeff(k);
    for (const auto& [e, c] : den.terms())
      if (e >= 1 && e <= k) acc -= c * r[k - e];
    r[k] = acc * inv;
  }
  return r;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
  int m = std::min(order(), o.order());
  PowerSeries r(m);
  for (int i = 0; i <= m; ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; i + j <= m; ++j)
      if (!o[j].is_zero()) r[i + j] += (*this)[i] * o[j];
  }
  r.pre_ = pre_ + o.pre_;
  return *this = r;
}

PowerSeries& PowerSeries::operator*=(const RatFunc& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("zero divisor");
  PowerSeries r(order());
  RatFunc inv = c_[0].inverse();
  r[0] = inv;
  for (int k = 1; k <= order(); ++k) {
    RatFunc acc(0);
    for (int j = 1; j <= k; ++j)
      if (!c_[static_cast<std::size_t>(j)].is_zero()) acc += (*this)[j] * r[k - j];
    r[k] = -acc * inv;
  }
  r.pre_ = -pre_;
  return r;
}

PowerSeries PowerSeries::subst_scale(const RatFunc& c) const {
  PowerSeries r = *this;
  RatFunc p(1);
  for (int k = 0; k <= order(); ++k) {
    r[k] *= p;
    p *= c;
  }
  return r;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries r(order);
  for (int k = 0; k <= order && k <= this->order(); ++k) r[k] = (*this)[k];
  r.pre_ = pre_;
  return r;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  if (pre_ != 0) os << "s^(" << rational_string(pre_) << ")*";
  os << "[";
  for (int k = 0; k <= order(); ++k) os << (k ? ", " : "") << (*this)[k].to_string();
  os << "]";
  return os.str();
}

PowerSeries pochhammer_series(int m, bool negate, int step, int order) {
  if (step <= 0 || order < 0) throw std::invalid_argument("pochhammer_series: step > 0 and order >= 0 required");
  // Euler: (xz; Q)_inf = sum_k (-x)^k Q^{k(k-1)/2} z^k / (Q;Q)_k
  PowerSeries r(order);
  RatFunc x(LaurentPoly(Rational(negate ? -1 : 1), m));
  RatFunc Q = RatFunc::s(step);
  RatFunc term(1);
  RatFunc qpow(1);  // Q^k
  r[0] = term;
  for (int k = 1; k <= order; ++k) {
    // c_k = c_{k-1} * (-x) * Q^{k-1} / (1 - Q^k)
    RatFunc prev_q = qpow;
    qpow *= Q;
    term = term * (-x) * prev_q / (RatFunc(1) - qpow);
    r[k] = term;
  }
  return r;
}

}  // namespace qaff
