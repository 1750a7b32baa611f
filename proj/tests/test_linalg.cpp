#include "doctest.h"
#include "qaff/linalg.hpp"
#include "qaff/modp.hpp"
#include "qaff/ratfunc.hpp"

#include <random>

using namespace qaff;

namespace {

Mat<Fp> random_mat(std::mt19937_64& g, std::size_t r, std::size_t c, int zero_pct) {
  Mat<Fp> m(r, Vec<Fp>(c));
  for (auto& row : m)
    for (auto& x : row)
      if (static_cast<int>(g() % 100) >= zero_pct) x = Fp(g() % 1000);
  return m;
}

}  // namespace

TEST_CASE("solve and inverse against multiplication") {
  std::mt19937_64 g(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + g() % 6;
    auto a = random_mat(g, n, n, 40);
    auto inv = inverse(a);
    if (inv) {
      auto p = matmul(a, *inv);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(p[i][j] == Fp(i == j ? 1 : 0));
    } else {
      CHECK(rank(a) < n);
    }
    auto x0 = random_mat(g, n, 2, 0);
    auto b = matmul(a, x0);
    auto x = solve(a, b, n);
    REQUIRE(x);
    auto bb = matmul(a, *x);
    CHECK(bb == b);
  }
}

TEST_CASE("rational solve with a consistent overdetermined system") {
  RatFunc s = RatFunc::s(1);
  Mat<RatFunc> a{{RatFunc(1)}, {-s}}, b{{s + RatFunc(1)}, {-s * (s + RatFunc(1))}};
  auto x = solve(a, b, 1);
  REQUIRE(x);
  CHECK((*x)[0][0] == s + RatFunc(1));
  Mat<RatFunc> bad{{RatFunc(1)}, {RatFunc(1)}};
  CHECK_FALSE(solve(a, bad, 1));
}

TEST_CASE("nullspace vectors are killed") {
  std::mt19937_64 g(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + g() % 5, c = 1 + g() % 7;
    auto m = random_mat(g, r, c, 50);
    auto ns = nullspace(m, c);
    CHECK(ns.size() + rank(m) == c);
    for (const auto& v : ns)
      for (const auto& row : m) {
        Fp acc(0);
        for (std::size_t j = 0; j < c; ++j) acc += row[j] * v[j];
        CHECK(acc.is_zero());
      }
  }
}
