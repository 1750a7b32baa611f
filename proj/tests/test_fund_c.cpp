#include "doctest.h"
#include "qaff/fund_c.hpp"

#include <map>

using namespace qaff;

TEST_CASE("vector module of type C") {
  for (int n = 2; n <= 3; ++n) {
    UModule v = vector_module_C(n);
    CHECK(v.dim() == 2 * n);
    auto rep = check_relations(v);
    CHECK_MESSAGE(rep.ok(), (rep.ok() ? "" : rep.failures[0]));
  }
  UModule v = vector_module_C(2);
  int one = v.find("(1)"), onebar = v.find("(1b)");
  CHECK(v.wt(one) == Weight({1, 0}));
  CHECK(v.wt(onebar) == Weight({-1, 0}));
  CHECK(v.F(0).part(0).get(one, onebar) == RatFunc(1));
}

TEST_CASE("fused fundamentals match the KN crystals") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 2; k <= n; ++k) {
      const UModule& m = module_C(n, k);
      CrystalGraph B = build_crystal_C(n, k);
      CHECK(m.dim() == B.size());
      // character oracle: multiplicities from the crystal
      std::map<Weight, int> a, b;
      for (int x = 0; x < m.dim(); ++x) ++a[m.wt(x)];
      for (int x = 0; x < B.size(); ++x) ++b[B.wt(x)];
      CHECK(a == b);
      auto rep = check_relations(m);
      CHECK_MESSAGE(rep.ok(), "n=", n, " k=", k, " ", (rep.ok() ? "" : rep.failures[0]));
    }
  CHECK(module_C(2, 2).dim() == 5);
  CHECK(module_C(3, 2).dim() == 14);
}

TEST_CASE("classical decomposition of V1 (x) V1") {
  const UModule& v = module_C(2, 1);
  UModule vv = tensor(v, v);
  // sp4: V1 (x) V1 = V(2 eps1) + V(eps1+eps2) + k; eps1+eps2 occurs twice, once as a hw vector
  CHECK(vv.weight_space(Weight({1, 1})).size() == 2);
  CHECK(classical_hw_vectors(vv, Weight({1, 1})).size() == 1);
  CHECK(classical_hw_vectors(vv, Weight({0, 0})).size() == 1);
}

TEST_CASE("i and p maps") {
  for (int n = 2; n <= 3; ++n)
    for (int mu = 1; mu < n; ++mu)
      for (int nu = 1; mu + nu <= n; ++nu) {
        IPMaps m = solve_ip_C(n, mu, nu);
        CHECK(m.hom_i == 1);
        CHECK(m.hom_p == 1);
        const UModule &A = module_C(n, mu), &B = module_C(n, nu);
        UModule tgt = tensor(twist(A, RatFunc::neg_s(nu)), twist(B, RatFunc::neg_s(-mu)));
        UModule src = tensor(twist(A, RatFunc::neg_s(-nu)), twist(B, RatFunc::neg_s(mu)));
        CHECK(is_intertwiner(m.i, module_C(n, mu + nu), tgt));
        CHECK(is_intertwiner(m.p, src, module_C(n, mu + nu)));
        // p o i is zero or a scalar; i o p is never the identity on the product
        RMat pi = m.p * m.i;
        CHECK(pi.nnz() <= static_cast<std::size_t>(module_C(n, mu + nu).dim()));
      }
}

TEST_CASE("duality of the vector module") {
  std::vector<UModule> mods{UModule(), module_C(2, 1), module_C(2, 2)};
  DualityResult d = duality_solve(mods, 1, 8);
  CHECK(d.partner == 1);
  CHECK(d.z0 == RatFunc::s(6));
  CHECK(trace_C(2).rows() == 1);
}

TEST_CASE("filtration data") {
  Conj2Report r = check_filtration(conj2_maps_C(2, 1));
  REQUIRE(r.dims.size() == 2);
  CHECK(r.dims[0] == 3);
  CHECK(r.dims[1] == 1);
  CHECK(r.ok());
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) {
      Conj2Report c = check_filtration(conj2_maps_C(n, i));
      CHECK_MESSAGE(c.ok(), "n=", n, " i=", i, " ", (c.failures.empty() ? "" : c.failures[0]));
      CHECK(c.dims.back() == 1);
    }
}
