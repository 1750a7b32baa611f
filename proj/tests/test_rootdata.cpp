#include "doctest.h"
#include "qaff/rootdata.hpp"

#include <random>

using namespace qaff;

TEST_CASE("pairings with fundamental weights") {
  RootData a3 = RootData::A(3);
  CHECK(a3.pairing(1, a3.fundamental(1)) == 1);
  CHECK(a3.pairing(2, a3.fundamental(1)) == 0);
  CHECK(a3.pairing(0, a3.fundamental(1)) == -1);
  RootData c2 = RootData::C(2);
  CHECK(c2.pairing(0, c2.fundamental(1)) == -1);
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= 2; ++i) CHECK(c2.pairing(i, c2.fundamental(k)) == (i == k));
  CHECK_THROWS(a3.pairing(3, a3.zero()));
}

TEST_CASE("inner products") {
  CHECK(RootData::C(2).inner(RootData::C(2).fundamental(1), RootData::C(2).fundamental(1)) == Rational(1, 2));
  RootData a3 = RootData::A(3);
  CHECK(a3.inner(a3.fundamental(1), a3.fundamental(1)) == Rational(2, 3));
  CHECK(a3.inner(a3.fundamental(1), a3.fundamental(2)) == Rational(1, 3));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (auto rd : {RootData::A(3), RootData::A(5), RootData::C(2), RootData::C(3)})
    for (int trial = 0; trial < 20; ++trial) {
      Weight x = rd.zero(), y = rd.zero();
      for (auto& c : x.c) c = d(rng);
      for (auto& c : y.c) c = d(rng);
      CHECK(rd.inner(x, y) == rd.inner(y, x));
      // (alpha_i, alpha_i)/2 <h_i, x> = (alpha_i, x)
      for (int i = 0; i < rd.num_nodes(); ++i) {
        Rational half = rd.inner(rd.alpha(i), rd.alpha(i)) / 2;
        CHECK(half * rd.pairing(i, x) == rd.inner(rd.alpha(i), x));
      }
    }
}

TEST_CASE("cartan matrices") {
  for (auto rd : {RootData::A(2), RootData::A(3), RootData::A(5), RootData::C(2), RootData::C(3), RootData::C(4)}) {
    auto a = rd.marks();
    for (int i = 0; i < rd.num_nodes(); ++i) {
      CHECK(rd.cartan(i, i) == 2);
      int sum = 0;
      for (int j = 0; j < rd.num_nodes(); ++j) sum += a[static_cast<std::size_t>(j)] * rd.cartan(i, j);
      CHECK(sum == 0);
    }
  }
  RootData c2 = RootData::C(2);
  CHECK(c2.cartan(0, 1) == -1);
  CHECK(c2.cartan(1, 0) == -2);
  CHECK(c2.cartan(2, 1) == -1);
  CHECK(c2.cartan(1, 2) == -2);
  CHECK(RootData::A(2).cartan(0, 1) == -2);
}

TEST_CASE("duality constants") {
  auto c2 = RootData::C(2).constants();
  CHECK(c2.pstar() == RatFunc::s(6));
  CHECK(c2.delta_rho == 3);
  CHECK(c2.rho_vee_delta == 4);
  auto a3 = RootData::A(3).constants();
  CHECK(a3.delta_rho == 3);
  CHECK(a3.pstar() == RatFunc::neg_q(3));
  for (int n = 2; n <= 5; ++n) {
    RootData rd = RootData::A(n);
    for (int i = 0; i < n; ++i) CHECK(rd.dual_index(rd.dual_index(i)) == i);
    CHECK(rd.dual_index(0) == 0);
  }
  CHECK(RootData::A(4).dual_index(1) == 3);
  for (int i = 0; i <= 3; ++i) CHECK(RootData::C(3).dual_index(i) == i);
}

TEST_CASE("weyl group helpers") {
  RootData a3 = RootData::A(3);
  Weight w1 = a3.fundamental(1);
  Weight low = a3.reflect(2, a3.reflect(1, w1));
  CHECK(low == Weight({0, -1}));
  CHECK(a3.dominant_rep(low) == w1);
  auto rc = a3.root_coords(a3.alpha(1) + 2 * a3.alpha(2));
  CHECK(rc[0] == 1);
  CHECK(rc[1] == 2);
  RootData c2 = RootData::C(2);
  CHECK(c2.dominant_rep(Weight({0, -1})) == Weight({1, 0}));
  CHECK(c2.is_dominant(Weight({1, 1})));
}
