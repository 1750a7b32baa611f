#pragma once
// Truncated power series in z over Q(q_s), with an optional q_s^e prefactor
// (e rational) for the fractional constants of the universal R scalar.

#include "qaff/birat.hpp"

#include <string>
#include <vector>

namespace qaff {

class PowerSeries {
 public:
  explicit PowerSeries(int order = 0) : c_(static_cast<std::size_t>(order + 1)) {}
  static PowerSeries one(int order);
  // Expansion of a rational function in z which is regular at z = 0.
  static PowerSeries from_rational(const ZPoly& num, const ZPoly& den, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const RatFunc& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  RatFunc& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const Rational& prefactor() const { return pre_; }
  void set_prefactor(const Rational& e) { pre_ = e; }

  PowerSeries& operator*=(const PowerSeries& o);
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  PowerSeries& operator*=(const RatFunc& c);
  PowerSeries inverse() const;
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }
  PowerSeries subst_scale(const RatFunc& c) const;  // z -> c z
  PowerSeries truncated(int order) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.pre_ == b.pre_ && a.c_ == b.c_; }
  std::string to_string() const;

 private:
  std::vector<RatFunc> c_;
  Rational pre_{0};
};

// Truncation of (x z; q_s^step)_inf with x = (negate ? -1 : 1) * q_s^m.
PowerSeries pochhammer_series(int m, bool negate, int step, int order);

}  // namespace qaff
