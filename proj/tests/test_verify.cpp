#include "doctest.h"
#include "qaff/verify.hpp"

using namespace qaff;

namespace {
const AffineType A3{Family::A, 3}, A4{Family::A, 4}, C2{Family::C, 2};
}

TEST_CASE("tensor rule fixed by the module") {
  CHECK(empirical_tensor_rule(A3) == TensorRule::Kashiwara);
  CHECK(empirical_tensor_rule(C2) == TensorRule::Kashiwara);
}

TEST_CASE("cyclicity of two- and three-fold tensors") {
  // at the pole q^2: reducible, generated only for the decreasing order
  auto r = check_conj1({A3, {{1, 0}, {1, 4}}});
  CHECK(r.order == "increasing");
  CHECK_FALSE(r.cyclic);
  CHECK(r.cocyclic);
  CHECK(r.generated == 6);
  CHECK(r.ok());
  CHECK_FALSE(r.literal_ok);
  r = check_conj1({A3, {{1, 4}, {1, 0}}});
  CHECK(r.cyclic);
  CHECK(r.ok());
  r = check_conj1({C2, {{1, 0}, {2, 3, -1}}});
  CHECK(r.cyclic);
  CHECK(r.cocyclic);
  r = check_conj1({A3, {{2, 0}}});
  CHECK(r.cyclic);
  CHECK(r.cocyclic);
  r = check_conj1({C2, {{1, 4}, {1, 2}, {1, 0}}});
  CHECK(r.ok());
  CHECK_THROWS_WITH(check_conj1({A3, {{1, 0}, {1, 4}, {1, 2}}}), "precondition: ordering");
}

TEST_CASE("pole location") {
  CHECK(check_cor_pole(A3, 1, 1, 4).pole);
  CHECK(check_cor_pole(A3, 1, 1, 4).ok());
  CHECK_FALSE(check_cor_pole(C2, 1, 1, -2).pole);
  for (auto t : {A3, C2})
    for (auto [i, j] : budget_pairs(t, 100)) {
      CHECK_FALSE(check_cor_pole(t, i, j, 0).pole);
      CHECK_FALSE(check_cor_pole(t, i, j, 0, -1).pole);
    }
}

TEST_CASE("filtration data via the driver") {
  auto r = check_conj2(A4, 2);
  CHECK(r.dims == std::vector<int>{5, 3, 1});
  CHECK(r.ok());
  CHECK(check_conj2(C2, 2).ok());
  CHECK(check_conj2(C2, 2).cond1);
}

TEST_CASE("reducibility certificates, type C") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= k; ++l) {
        auto w = reducibility_witnesses_C(n, k, l);
        CHECK_MESSAGE(w.ok(), n, k, l);
      }
  auto w = reducibility_witnesses_C(2, 1, 1);
  REQUIRE(w.items.size() == 2);
  CHECK(w.items[0].root == RatFunc::s(2));
  CHECK(w.items[1].root == RatFunc::s(6));
  CHECK_THROWS(reducibility_witnesses_C(2, 1, 2));
}

TEST_CASE("pole tables") {
  auto tab = pole_table(A4, budget_pairs(A4, 1000));
  CHECK(tab.rows.size() == 9);
  CHECK(tab.ok());
  CHECK(tab.bound == 8);
  auto c = pole_table(C2, budget_pairs(C2, 1000));
  CHECK(c.ok());
  CHECK(c.bound == 6);
  CHECK(factored_string(c.rows[0].roots) == "(z - s^2)*(z - s^6)");
}

TEST_CASE("pole iff reducible") {
  for (auto [t, i, j] : {std::tuple{A3, 1, 1}, std::tuple{A3, 1, 2}, std::tuple{C2, 1, 2}, std::tuple{C2, 2, 2}}) {
    auto sw = pole_reducibility_sweep(t, i, j, 2 * (t.n + 2));
    CHECK(sw.disagreements == 0);
    CHECK(sw.items.size() == static_cast<std::size_t>(2 * (4 * (t.n + 2) + 1)));
  }
}

TEST_CASE("unique dominant extremal vector at twist 1") {
  auto e = dominant_extremal_uniqueness({A3, {{1, 0}, {2, 0}}});
  CHECK(e.unique);
  e = dominant_extremal_uniqueness({C2, {{1, 0}, {1, 0}, {2, 0}}});
  CHECK(e.unique);
}
