#include "doctest.h"
#include "qaff/crystal.hpp"
#include "qaff/fund_a.hpp"
#include "qaff/fund_c.hpp"

using namespace qaff;

namespace {

std::vector<CrystalGraph> fundamentals(int max_a, int max_c) {
  std::vector<CrystalGraph> out;
  for (int n = 2; n <= max_a; ++n)
    for (int k = 1; k < n; ++k) out.push_back(build_crystal_A(n, k));
  for (int n = 2; n <= max_c; ++n)
    for (int k = 1; k <= n; ++k) out.push_back(build_crystal_C(n, k));
  return out;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("type A subset crystals") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) CHECK(build_crystal_A(n, k).size() == binom(n, k));
  auto b = build_crystal_A(3, 2);
  CHECK(b.e(1, b.find("{2,3}")) == b.find("{1,3}"));
  auto v = build_crystal_A(3, 1);
  CHECK(v.f(0, v.find("{3}")) == v.find("{1}"));
  CHECK(v.e(0, v.find("{3}")) == -1);
  CHECK_THROWS(build_crystal_A(3, 3));
}

TEST_CASE("KN columns") {
  auto b = build_crystal_C(2, 2);
  CHECK(b.size() == 5);
  for (const char* l : {"(1,2)", "(1,2b)", "(2,2b)", "(2,1b)", "(2b,1b)"}) CHECK(b.find(l) >= 0);
  CHECK(b.find("(1,1b)") == -1);
  CHECK(b.e(0, b.find("(1,2)")) == b.find("(2,1b)"));
  auto v = build_crystal_C(2, 1);
  CHECK(v.size() == 4);
  CHECK(v.f(2, v.find("(2)")) == v.find("(2b)"));
  CHECK(v.f(0, v.find("(1b)")) == v.find("(1)"));
  CHECK(v.wt(v.find("(1)")) == Weight({1, 0}));
  CHECK(v.wt(v.find("(1b)")) == Weight({-1, 0}));
  // dimensions of the fundamental representations of sp(2n): C(2n,k) - C(2n,k-2)
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) CHECK(build_crystal_C(n, k).size() == binom(2 * n, k) - (k >= 2 ? binom(2 * n, k - 2) : 0));
  CHECK(build_crystal_C(3, 2).size() == 14);
}

TEST_CASE("crystal axioms hold for fundamentals and tensors") {
  auto fs = fundamentals(4, 3);
  for (const auto& b : fs) CHECK(b.check_axioms().empty());
  for (const auto& a : fs)
    for (const auto& b : fs) {
      if (a.root_data().type() != b.root_data().type() || a.size() * b.size() > 200) continue;
      auto t = tensor(a, b);
      CHECK(t.size() == a.size() * b.size());
      CHECK(t.check_axioms().empty());
      for (int x = 0; x < t.size(); ++x) {
        auto [p, q] = t.factors[static_cast<std::size_t>(x)];
        CHECK(t.wt(x) == a.wt(p) + b.wt(q));
      }
    }
}

TEST_CASE("weyl action") {
  auto v = build_crystal_A(3, 1);
  CHECK(weyl_action(v, 1, v.find("{1}")) == v.find("{2}"));
  for (const auto& b : fundamentals(4, 3))
    for (int x = 0; x < b.size(); ++x)
      for (int i = 0; i < b.root_data().num_nodes(); ++i) {
        int y = weyl_action(b, i, x);
        CHECK(weyl_action(b, i, y) == x);
        CHECK(b.wt(y) == b.root_data().reflect(i, b.wt(x)));
      }
}

TEST_CASE("extremal vectors") {
  for (const auto& b : fundamentals(4, 3)) {
    CHECK(is_extremal(b, 0));
    for (int x = 0; x < b.size(); ++x) {
      int y = extremalize(b, x);
      CHECK(is_extremal(b, y));
      if (is_extremal(b, x)) CHECK(y == x);
    }
  }
  for (auto b : {build_crystal_A(3, 1), build_crystal_A(4, 1), build_crystal_C(2, 1), build_crystal_C(3, 1)})
    for (int x = 0; x < b.size(); ++x) CHECK(is_extremal(b, x));
  auto v = build_crystal_A(3, 1);
  auto t = tensor(v, v);
  CHECK(is_extremal(t, t.find("{1}⊗{1}")));
  // fixture: {1} and {3} do not share a closed chamber
  CHECK_FALSE(is_extremal(t, t.find("{1}⊗{3}")));
  CHECK_FALSE(same_chamber(v.root_data(), v.wt(v.find("{1}")), v.wt(v.find("{3}"))));
  // the middle node of B(varpi_2) for C_2 has weight zero and is not extremal
  auto c = build_crystal_C(2, 2);
  CHECK_FALSE(is_extremal(c, c.find("(2,2b)")));
}

TEST_CASE("extremal tensor criterion") {
  auto fs = fundamentals(3, 3);
  for (const auto& a : fs)
    for (const auto& b : fs) {
      if (a.root_data().type() != b.root_data().type()) continue;
      for (auto rule : {TensorRule::Kashiwara, TensorRule::Mirrored}) {
        auto t = tensor(a, b, rule);
        for (int x = 0; x < t.size(); ++x) {
          auto [p, q] = t.factors[static_cast<std::size_t>(x)];
          bool rhs = is_extremal(a, p) && is_extremal(b, q) && same_chamber(a.root_data(), a.wt(p), b.wt(q));
          CHECK(is_extremal(t, x) == rhs);
        }
      }
    }
}

TEST_CASE("orbits of extremal vectors are reached by raising cascades") {
  for (const auto& b : fundamentals(3, 3))
    for (int x = 0; x < b.size(); ++x) {
      if (!is_extremal(b, x)) continue;
      auto F = emax_closure(b, x);
      for (int y : weyl_orbit(b, x)) CHECK(std::find(F.begin(), F.end(), y) != F.end());
    }
}

TEST_CASE("simplicity and connectedness") {
  auto fs = fundamentals(3, 3);
  for (const auto& b : fs) {
    CHECK(is_simple(b).simple);
    CHECK(is_connected(b));
  }
  for (const auto& a : fs)
    for (const auto& b : fs) {
      if (a.root_data().type() != b.root_data().type()) continue;
      auto t = tensor(a, b);
      auto rep = is_simple(t);
      CHECK_MESSAGE(rep.simple, a.label(0), " x ", b.label(0), ": ", rep.reason);
      CHECK(is_connected(t));
    }
  auto v = build_crystal_A(3, 1);
  CHECK_FALSE(is_connected(disjoint_union(v, v)));
  CHECK_FALSE(is_simple(disjoint_union(v, v)).simple);
  // negative control: drop one arrow
  auto broken = build_crystal_A(3, 1);
  CrystalGraph cut(broken.root_data(), {"{1}", "{2}", "{3}"}, {broken.wt(0), broken.wt(1), broken.wt(2)});
  cut.set_arrow(1, 0, 1);
  cut.set_arrow(2, 1, 2);
  CHECK_FALSE(cut.check_axioms().empty());
  CHECK_FALSE(is_simple(cut).simple);
}

TEST_CASE("raising words") {
  for (auto rd : {RootData::A(3), RootData::A(4), RootData::C(2), RootData::C(3)}) {
    for (int k = 1; k <= rd.rank(); ++k) {
      Weight lam = rd.fundamental(k);
      CHECK(raising_word(rd, lam, lam).empty());
      // every orbit element, found from the crystal
      CrystalGraph b = rd.family() == Family::A ? build_crystal_A(rd.n(), k) : build_crystal_C(rd.n(), k);
      for (int x = 0; x < b.size(); ++x) {
        if (rd.dominant_rep(b.wt(x)) != lam) continue;
        // from the lowest-type weight back up to any target
        Weight start = b.wt(x);
        for (int y = 0; y < b.size(); ++y) {
          if (rd.dominant_rep(b.wt(y)) != lam) continue;
          std::vector<int> w;
          try {
            w = raising_word(rd, start, b.wt(y));
          } catch (const std::invalid_argument&) {
            continue;
          }
          Weight cur = start;
          for (int i : w) {
            CHECK(rd.pairing(i, cur) > 0);
            cur = rd.reflect(i, cur);
          }
          CHECK(cur == b.wt(y));
        }
      }
    }
  }
  RootData a3 = RootData::A(3);
  CHECK_THROWS_AS(raising_word(a3, a3.fundamental(1), a3.fundamental(2)), std::invalid_argument);
}

TEST_CASE("dot export is stable") {
  auto v = build_crystal_A(3, 1);
  std::string d = v.to_dot();
  CHECK(d == v.to_dot());
  CHECK(d.find("n0 -> n1 [label=\"1\"]") != std::string::npos);
  CHECK(d.find("n2 -> n0 [label=\"0\"]") != std::string::npos);
}
