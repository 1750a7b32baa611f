#include "doctest.h"
#include "qaff/kernels.hpp"
#include "qaff/rmatrix.hpp"

#include <omp.h>

using namespace qaff;

TEST_CASE("serial and parallel kernels agree") {
  omp_set_num_threads(4);
  const RMatrixResult& R = fundamental_R({Family::C, 2}, 2, 1);
  UModule S = tensor(R.V, twist_formal(R.W)), T = tensor(twist_formal(R.W), R.V);
  std::vector<ZMatrix> C;
  std::vector<ZPoly> a;
  for (const auto& cp : R.comps) {
    ZMatrix Z(cp.P);
    C.push_back(Z * S.F(0) - T.F(0) * Z);
    a.push_back(exact_div(R.denominator, cp.gamma.den()) * cp.gamma.num());
  }
  CHECK(combination_vanishes(a, C, Exec::Serial));
  CHECK(combination_vanishes(a, C, Exec::Parallel));
  auto bad = a;
  bad[0] = bad[0].shifted(1);
  CHECK_FALSE(combination_vanishes(bad, C, Exec::Serial));
  CHECK_FALSE(combination_vanishes(bad, C, Exec::Parallel));

  ModpRows s = eval_rows_mod(C, Fp(1000003), Fp(12345), Exec::Serial);
  ModpRows p = eval_rows_mod(C, Fp(1000003), Fp(12345), Exec::Parallel);
  CHECK(s.keys == p.keys);
  CHECK(s.rows == p.rows);
  CHECK_FALSE(s.rows.empty());

  SparseMatrix<Fp> M = R.eval_mod(Fp(1000003), Fp(12345));
  Vec<Fp> x;
  for (int k = 0; k < R.dim(); ++k) x.push_back(Fp(3L * k + 1));
  CHECK(spmv_mod(M, x, Exec::Serial) == spmv_mod(M, x, Exec::Parallel));
  omp_set_num_threads(1);
}
