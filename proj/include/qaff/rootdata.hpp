#pragma once
// Root data of A^{(1)}_{n-1} and C^{(1)}_n.

#include "qaff/ratfunc.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qaff {

enum class Family { A, C };

struct AffineType {
  Family family;
  int n;
  friend auto operator<=>(const AffineType&, const AffineType&) = default;
};

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Classical level-0 weight. Type A: coordinates on the fundamental weights
// varpi_1..varpi_{n-1}. Type C: coordinates on eps_1..eps_n.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> v) : c(std::move(v)) {}
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }
  friend auto operator<=>(const Weight&, const Weight&) = default;
  std::string to_string() const;
};

// p* = sign * q_s^exp
struct DualityConstants {
  int delta_rho;       // (delta, rho) = sum of comarks
  int rho_vee_delta;   // <rho^vee, delta> = sum of marks
  int gamma;           // denominators of q-exponents: 1 for A, 2 for C
  int pstar_sign;
  int pstar_sexp;
  int alt_pstar_sign;  // alternative twist (-q)^{n+1} in type A; equals pstar in type C
  int alt_pstar_sexp;
  RatFunc pstar() const { return RatFunc(LaurentPoly(Rational(pstar_sign), pstar_sexp)); }
};

class RootData {
 public:
  explicit RootData(AffineType t);
  static RootData A(int n) { return RootData({Family::A, n}); }
  static RootData C(int n) { return RootData({Family::C, n}); }

  AffineType type() const { return t_; }
  Family family() const { return t_.family; }
  int n() const { return t_.n; }
  int num_nodes() const { return t_.family == Family::A ? t_.n : t_.n + 1; }
  int rank() const { return t_.family == Family::A ? t_.n - 1 : t_.n; }
  // highest index of a fundamental weight (A: n-1, C: n)
  int max_fundamental() const { return rank(); }
  std::string name() const;

  int cartan(int i, int j) const;  // <h_i, alpha_j>
  std::vector<int> marks() const;
  std::vector<int> comarks() const;
  int pairing(int i, const Weight& w) const;
  Rational inner(const Weight& a, const Weight& b) const;
  Weight alpha(int i) const;
  Weight fundamental(int k) const;
  Weight zero() const { return Weight(std::vector<int>(static_cast<std::size_t>(rank()), 0)); }
  // (alpha_i, alpha_i) in units where q_i = q_s^{qi_exp(i)}
  int qi_exp(int i) const;
  // t_i acts on weight w by q_s^{t_exp(i, w)}
  int t_exp(int i, const Weight& w) const { return qi_exp(i) * pairing(i, w); }
  int dual_index(int i) const;
  DualityConstants constants() const;

  Weight reflect(int i, const Weight& w) const;
  bool is_dominant(const Weight& w) const;
  Weight dominant_rep(const Weight& w) const;
  // Coefficients of w in the classical simple roots alpha_1..alpha_rank.
  std::vector<Rational> root_coords(const Weight& w) const;

 private:
  void check_index(int i) const;
  AffineType t_;
};

}  // namespace qaff
