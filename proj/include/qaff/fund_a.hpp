#pragma once
// Type A^{(1)}_{n-1} fundamental crystals and modules.

#include "qaff/conj2.hpp"
#include "qaff/crystal.hpp"
#include "qaff/umodule.hpp"

#include <vector>

namespace qaff {

// Subsets of {1..n} of size k, lexicographic order; index 0 acts through (n, 1).
CrystalGraph build_crystal_A(int n, int k);
std::string subset_label(const std::vector<int>& elems);
std::vector<std::vector<int>> subsets_A(int n, int k);

// V(varpi_k); k = 0 and k = n give the trivial module on a single subset.
UModule module_A(int n, int k);

// i_{j,k}: V(varpi_{j+k}) -> V(varpi_j)_{(-q)^k} (x) V(varpi_k)_{(-q)^{-j}}
RMat embed_i(int n, int j, int k);
// p_{j,k}: V(varpi_j)_{(-q)^{-k}} (x) V(varpi_k)_{(-q)^j} -> V(varpi_{j+k})
RMat project_p(int n, int j, int k);
// The twisted source and target modules of the two maps.
UModule embed_target(int n, int j, int k);
UModule project_source(int n, int j, int k);

// phi_mu = ((p_{i,1})_{-q} (x) W) o (V_i (x) (i_{1,mu-1})_{(-q)^{i-mu+2}}), 1 <= i <= n-1;
// at i = n-1 the target V(varpi_n) is the trivial module.
Conj2Data conj2_maps_A(int n, int i);

}  // namespace qaff
