#pragma once
// Hot loops of the R-matrix pipeline, each with an OpenMP version and a
// serial reference that must agree bit for bit.

#include "qaff/umodule.hpp"

#include <vector>

namespace qaff {

enum class Exec { Serial, Parallel };

// Whether sum_p a_p(z) C_p(z) vanishes identically.
bool combination_vanishes(const std::vector<ZPoly>& a, const std::vector<ZMatrix>& C, Exec ex = Exec::Parallel);

// Rows of sum_p x_p C_p at (q_s, z) as functions of x: entry (row key, p) -> C_p(q_s, z).
// Keys enumerate (matrix row, column) pairs in lexicographic order.
struct ModpRows {
  std::vector<std::pair<int, int>> keys;
  std::vector<SparseRow<Fp>> rows;
};
ModpRows eval_rows_mod(const std::vector<ZMatrix>& C, Fp qs, Fp z, Exec ex = Exec::Parallel);

// y = M x over F_p, row-parallel.
Vec<Fp> spmv_mod(const SparseMatrix<Fp>& m, const Vec<Fp>& x, Exec ex = Exec::Parallel);

}  // namespace qaff
