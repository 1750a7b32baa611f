#pragma once
// Filtration data F_0 > F_1 > ... > F_N on V(varpi_i) cut out by maps phi_mu.

#include "qaff/umodule.hpp"

#include <string>
#include <vector>

namespace qaff {

struct Conj2Step {
  int s = 0, t = 0;       // phi: V_i (x) V(varpi_s)_b -> V(varpi_t)_c (x) W
  RatFunc b, c;
  int w_index = 0;        // W = V(varpi_w)_{w_twist}
  RatFunc w_twist;
  int t_dim = 1;          // dim V(varpi_t); target basis is t-major
  UModule source, target;
  RMat phi;
};

struct Conj2Data {
  int n = 0, i = 0, istar = 0;
  UModule Vi;
  std::vector<Conj2Step> steps;
};

struct Conj2Report {
  std::vector<int> dims;                // dim F_0 .. dim F_N
  std::vector<std::vector<RVec>> F;     // bases
  bool cond1 = false, cond2 = false, cond3 = false, cond4 = false;
  bool valuations = false;              // b_mu, c_mu in q_s A
  bool intertwiners = false;
  std::vector<std::string> failures;
  bool ok() const { return cond1 && cond2 && cond3 && cond4 && valuations && intertwiners; }
};

Conj2Report check_filtration(const Conj2Data& d, bool check_maps = true);

}  // namespace qaff
