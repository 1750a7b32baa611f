#include "qaff/kernels.hpp"
#include "qaff/rmatrix.hpp"

#include <benchmark/benchmark.h>

using namespace qaff;

namespace {

struct Fixture {
  std::vector<ZMatrix> C;
  std::vector<ZPoly> a;
  SparseMatrix<Fp> M;
  Vec<Fp> x;
};

// E_0 constraints of R(V2, V1) for C3 and the solved coefficients.
const Fixture& fixture() {
  static Fixture f = [] {
    Fixture g;
    const RMatrixResult& R = fundamental_R({Family::C, 3}, 2, 1);
    UModule S = tensor(R.V, twist_formal(R.W)), T = tensor(twist_formal(R.W), R.V);
    for (const auto& cp : R.comps) {
      ZMatrix Z(cp.P);
      g.C.push_back(Z * S.E(0) - T.E(0) * Z);
      g.a.push_back(exact_div(R.denominator, cp.gamma.den()) * cp.gamma.num());
    }
    g.M = R.eval_mod(Fp(1000003), Fp(998244353));
    for (int k = 0; k < R.dim(); ++k) g.x.push_back(Fp(static_cast<long>(k) * 7919 + 1));
    return g;
  }();
  return f;
}

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_combination_vanishes(benchmark::State& st) {
  const Fixture& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(combination_vanishes(f.a, f.C, mode(st)));
}

void BM_eval_rows_mod(benchmark::State& st) {
  const Fixture& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(eval_rows_mod(f.C, Fp(1000003), Fp(998244353), mode(st)));
}

void BM_spmv_mod(benchmark::State& st) {
  const Fixture& f = fixture();
  for (auto _ : st) benchmark::DoNotOptimize(spmv_mod(f.M, f.x, mode(st)));
}

}  // namespace

BENCHMARK(BM_combination_vanishes)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eval_rows_mod)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spmv_mod)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
