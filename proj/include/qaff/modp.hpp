#pragma once
// Prime field F_p, p = 2^61 - 1. Used for generic rank probes at a random point.

#include "qaff/ratfunc.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qaff {

class Fp {
 public:
  static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

  Fp() = default;
  Fp(long v) : v_(reduce_signed(v)) {}  // NOLINT
  static Fp raw(std::uint64_t v) {
    Fp r;
    r.v_ = v % P;
    return r;
  }
  static Fp from_mpz(const Integer& z) { return raw(mpz_fdiv_ui(z.get_mpz_t(), P)); }
  static Fp from_rational(const Rational& q);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    return raw_nored(s >= P ? s - P : s);
  }
  friend Fp operator-(Fp a, Fp b) { return raw_nored(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_); }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 m = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(m & P), hi = static_cast<std::uint64_t>(m >> 61);
    std::uint64_t s = lo + hi;
    while (s >= P) s -= P;
    return raw_nored(s);
  }
  Fp operator-() const { return raw_nored(v_ ? P - v_ : 0); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp inverse() const {
    if (!v_) throw std::domain_error("zero divisor");
    return pow(P - 2);
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }
  friend Fp operator/(Fp a, Fp b) { return a *= b.inverse(); }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
  Fp pow(std::uint64_t e) const {
    Fp r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Fp pow_signed(int e) const { return e >= 0 ? pow(static_cast<std::uint64_t>(e)) : inverse().pow(static_cast<std::uint64_t>(-e)); }
  std::size_t weight() const { return 1; }
  std::string to_string() const { return std::to_string(v_); }

 private:
  static Fp raw_nored(std::uint64_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  static std::uint64_t reduce_signed(long v) {
    long m = v % static_cast<long>(P);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(P) : m);
  }
  std::uint64_t v_ = 0;
};

// Evaluation q_s -> x. Throws std::domain_error when a denominator vanishes.
Fp eval_mod(const LaurentPoly& f, Fp x);
Fp eval_mod(const RatFunc& f, Fp x);

}  // namespace qaff
