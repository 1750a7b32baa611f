#pragma once
// Normalized R-matrices V (x) W_z -> W_z (x) V, their denominators, closed
// forms, universal scalars and consistency checks.

#include "qaff/birat.hpp"
#include "qaff/series.hpp"
#include "qaff/umodule.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qaff {

// V(varpi_k) of the given type, cached; k = 0 (and k = n in type A) is trivial.
const UModule& fundamental_module(const AffineType& t, int k);

// One classical isotypic piece: P maps the a-th highest weight vector of
// weight lambda in the source to the b-th one in the target.
struct RComponent {
  Weight lambda;
  int a = 0, b = 0;
  RMat P;
  BiRat gamma;
};

struct RMatrixResult {
  UModule V, W;
  std::vector<RComponent> comps;
  // hw vectors per lambda, source (V (x) W) and target (W (x) V)
  std::map<Weight, std::vector<RVec>> hw_source, hw_target;
  ZPoly denominator;                          // low degree 0, leading coefficient 1
  std::vector<std::pair<RatFunc, int>> poles;  // roots +-q_s^m with multiplicity
  ZPoly residual{1};                          // factor not split into such roots
  SparseMatrix<ZPoly> numerator;              // denominator * R
  int hom_dim = 0;
  bool minimal = false;                       // no root of d cancels from every entry
  int rows_checked = 0;

  int dim() const { return V.dim() * W.dim(); }
  BiRat entry(int r, int c) const { return BiRat(numerator.get(r, c), denominator); }
  RMat eval(const RatFunc& z) const;
  SparseMatrix<Fp> eval_mod(Fp qs, Fp z) const;
  std::vector<std::string> source_labels() const;
  std::vector<std::string> target_labels() const;
};

RMatrixResult solve_R(const UModule& V, const UModule& W);
const RMatrixResult& fundamental_R(const AffineType& t, int i, int j);

// Product formulas for the denominators.
ZPoly closed_form_d(const AffineType& t, int k, int l);

// R_11 of type C assembled entry by entry from the five-case formula.
SparseMatrix<BiRat> explicit_R11_C(int n);

struct ComponentRatio {
  Weight lambda;
  BiRat gamma, predicted, unit;
  bool unit_ok = false;  // gamma / predicted is c z^m
};
// gamma on the varpi_{k+1} and varpi_{k-1} components of R = R(V_k, V_1), type C.
std::vector<ComponentRatio> component_ratios(const RMatrixResult& R, int k);

// Truncated universal scalar a_{kl}(z) from the product formulas.
PowerSeries a_series(const AffineType& t, int k, int l, int M);

struct FunctionalEntry {
  std::string name;
  bool holds = false;
  std::string unit;    // solved unit factor
  std::string detail;
};
// reverse, eq_univ and eq_diff identities; solved denominators when use_solved.
std::vector<FunctionalEntry> functional_checks(const AffineType& t, int k, int l, int M, bool use_solved = true);

struct InversionReport {
  bool identity = false;  // R_WV(1/z) R_VW(z) = 1 on every hw vector
  bool spot = false;      // full matrices at random points mod p
};
InversionReport inversion(const RMatrixResult& vw, const RMatrixResult& wv);

struct YBReport {
  bool holds = false;
  int degree_bound = 0;
  int points = 0;
  std::string error;
};
// R_BC(y)_12 R_AC(xy)_23 R_AB(x)_12 = R_AB(x)_23 R_AC(xy)_12 R_BC(y)_23, x formal.
YBReport yang_baxter(const RMatrixResult& ab, const RMatrixResult& ac, const RMatrixResult& bc);
// The same identity with x and y specialized.
YBReport yang_baxter_at(const RMatrixResult& ab, const RMatrixResult& ac, const RMatrixResult& bc, const RatFunc& x,
                        const RatFunc& y);

struct PoleVerdict {
  bool pole = false;
  bool reducible = false;
  bool cyclic = false, cocyclic = false;
  bool consistent() const { return pole == reducible; }
};
PoleVerdict pole_reducibility(const AffineType& t, int i, int j, const RatFunc& a);

// Roots of d of the form +-q_s^m, |m| <= bound, with multiplicities.
std::vector<std::pair<RatFunc, int>> monomial_roots(ZPoly d, int bound, ZPoly* residual = nullptr);
// "(z - s^2)*(z - s^6)"; "1" for no roots.
std::string factored_string(const std::vector<std::pair<RatFunc, int>>& roots, const ZPoly& residual = ZPoly(1));

}  // namespace qaff
