#pragma once
// Type C^{(1)}_n fundamental crystals (KN columns) and modules.

#include "qaff/conj2.hpp"
#include "qaff/crystal.hpp"
#include "qaff/umodule.hpp"

#include <vector>

namespace qaff {

// Letters: +a for a, -a for the barred letter.
int kn_rank(int n, int letter);
std::string kn_letter(int letter);
std::string column_label(const std::vector<int>& col);
bool kn_admissible(int n, const std::vector<int>& col);
std::vector<std::vector<int>> kn_columns(int n, int k);

CrystalGraph build_crystal_C(int n, int k);

UModule vector_module_C(int n);
// V(varpi_k) inside V(varpi_1)_{(-q_s)^{k-1}} (x) V(varpi_{k-1})_{(-q_s)^{-1}},
// on the basis G(b) = f_i^{(eps_i(b))} G(e_i^max b) labelled by KN columns.
UModule fused_module_C(int n, int k, const UModule& prev);
// Cached V(varpi_k), 0 <= k <= n (k = 0 is the trivial module).
const UModule& module_C(int n, int k);

struct IPMaps {
  RMat i, p;          // i: V_{mu+nu} -> V_{mu,(-q_s)^nu} (x) V_{nu,(-q_s)^-mu}; p: V_{mu,(-q_s)^-nu} (x) V_{nu,(-q_s)^mu} -> V_{mu+nu}
  int hom_i = 0, hom_p = 0;
};
IPMaps solve_ip_C(int n, int mu, int nu);
// tr: V_1 (x) V_{1, q_s^{2n+2}} -> k, first nonzero entry 1.
RMat trace_C(int n);

Conj2Data conj2_maps_C(int n, int i);

}  // namespace qaff
