#include "qaff/kernels.hpp"

#include <exception>
#include <map>

namespace qaff {

namespace {

bool row_vanishes(const std::vector<ZPoly>& a, const std::vector<ZMatrix>& C, int r) {
  std::map<int, ZPoly> acc;
  for (std::size_t p = 0; p < C.size(); ++p) {
    if (a[p].is_zero()) continue;
    for (const auto& [d, M] : C[p].parts())
      for (const auto& [c, v] : M.row(r)) acc[c] += a[p].shifted(d).scaled(v);
  }
  for (const auto& [c, v] : acc)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

bool combination_vanishes(const std::vector<ZPoly>& a, const std::vector<ZMatrix>& C, Exec ex) {
  if (C.empty()) return true;
  const int rows = C[0].rows();
  int bad = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : bad) if (ex == Exec::Parallel)
  for (int r = 0; r < rows; ++r)
    if (!row_vanishes(a, C, r)) ++bad;
  return bad == 0;
}

ModpRows eval_rows_mod(const std::vector<ZMatrix>& C, Fp qs, Fp z, Exec ex) {
  const int P = static_cast<int>(C.size());
  std::vector<SparseMatrix<Fp>> ev(static_cast<std::size_t>(P));
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) if (ex == Exec::Parallel)
  for (int p = 0; p < P; ++p) {
    try {
      ev[static_cast<std::size_t>(p)] = C[static_cast<std::size_t>(p)].eval_mod(qs, z);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  ModpRows out;
  if (C.empty()) return out;
  std::map<std::pair<int, int>, SparseRow<Fp>> acc;
  for (int p = 0; p < P; ++p)
    for (int r = 0; r < ev[static_cast<std::size_t>(p)].rows(); ++r)
      for (const auto& [c, v] : ev[static_cast<std::size_t>(p)].row(r)) acc[{r, c}].emplace_back(p, v);
  for (auto& [k, row] : acc) {
    out.keys.push_back(k);
    out.rows.push_back(std::move(row));
  }
  return out;
}

Vec<Fp> spmv_mod(const SparseMatrix<Fp>& m, const Vec<Fp>& x, Exec ex) {
  Vec<Fp> y(static_cast<std::size_t>(m.rows()));
#pragma omp parallel for schedule(static) if (ex == Exec::Parallel)
  for (int i = 0; i < m.rows(); ++i) {
    Fp acc(0);
    for (const auto& [j, v] : m.row(i)) acc += v * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

}  // namespace qaff
