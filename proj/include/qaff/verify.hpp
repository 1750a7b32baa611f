#pragma once
// Verification drivers: cyclicity of tensor products, pole location, the
// filtration data, reducibility certificates and denominator tables.

#include "qaff/conj2.hpp"
#include "qaff/crystal.hpp"
#include "qaff/rmatrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qaff {

CrystalGraph fundamental_crystal(const AffineType& t, int k);

// Rule whose highest weight nodes in B(w1) (x) B(w1) are the q_s -> 0 limits of
// the module's highest weight vectors. Throws if neither or both agree.
TensorRule empirical_tensor_rule(const AffineType& t);

// Fixed reading of the ordering: z = a is a pole of R_ij only when val(a) > 0,
// and u (x) ... (x) u generates when the exponents weakly decrease.
std::string ordering_convention();

struct TensorFactor {
  int index = 1;
  int m = 0;     // twist sign * q_s^m
  int sign = 1;
  RatFunc twist() const { return RatFunc::s(m) * RatFunc(sign); }
};
struct TensorSpec {
  AffineType type{Family::A, 2};
  std::vector<TensorFactor> factors;
};
UModule build_tensor(const TensorSpec& spec);

struct Conj1Report {
  std::string order;  // increasing, decreasing or constant
  int dim = 0, generated = 0;
  bool cyclic = false, cocyclic = false;
  bool literal_ok = false;   // increasing -> cyclic, decreasing -> cocyclic
  bool reversed_ok = false;  // increasing -> cocyclic, decreasing -> cyclic
  bool ok() const { return reversed_ok; }
};
// Throws std::invalid_argument("precondition: ordering") unless the exponents are monotone.
Conj1Report check_conj1(const TensorSpec& spec);

struct CorPoleReport {
  RatFunc a;
  RatFunc d_at_a;
  bool pole = false;
  bool literal_ok = false;   // no pole when the exponent is >= 0
  bool reversed_ok = false;  // no pole when the exponent is <= 0
  bool ok() const { return reversed_ok; }
};
CorPoleReport check_cor_pole(const AffineType& t, int i, int j, int m, int sign = 1);

Conj2Report check_conj2(const AffineType& t, int i);

struct WitnessItem {
  int family = 1;  // 1: through V(w_{k+i}), 2: through the trace
  int i = 0;
  RatFunc root;
  bool nonzero = false, kills_hw = false, intertwiner = false;
  bool ok() const { return nonzero && kills_hw && intertwiner; }
};
struct WitnessReport {
  int n = 0, k = 0, l = 0;
  std::vector<WitnessItem> items;
  bool covers_roots = false;  // one item per root of the closed form, with multiplicity
  bool ok() const;
};
WitnessReport reducibility_witnesses_C(int n, int k, int l);

struct PoleRow {
  int i = 0, j = 0;
  ZPoly d, closed;
  bool match = false;
  std::vector<std::pair<RatFunc, int>> roots;
  bool form_ok = false;   // d splits into roots +-q_s^m
  bool range_ok = false;  // 0 < m <= bound
  int max_order = 0;
};
struct PoleTable {
  AffineType type{Family::A, 2};
  int bound = 0;  // q_s-exponent of the duality twist
  std::vector<PoleRow> rows;
  bool ok() const;
  std::string to_text() const;
};
PoleTable pole_table(const AffineType& t, const std::vector<std::pair<int, int>>& pairs);
// Ordered pairs (i, j) of fundamental indices with dim V_i * dim V_j <= max_dim.
std::vector<std::pair<int, int>> budget_pairs(const AffineType& t, int max_dim);

struct SweepItem {
  int m = 0, sign = 1;
  bool pole = false, pole_reversed = false, reducible = false;
  bool agree = false;
};
struct PoleSweep {
  int i = 0, j = 0;
  std::vector<SweepItem> items;
  int disagreements = 0;
};
// a = +-q_s^m, |m| <= range: pole of R_ij at a (or of R_ji at 1/a) iff V_i (x) V_{j,a} is reducible.
PoleSweep pole_reducibility_sweep(const AffineType& t, int i, int j, int range);

// Dominant extremal vectors of a tensor product: one line per weight, the top one spanned by u (x) ... (x) u.
struct ExtremalReport {
  int weights = 0;
  bool unique = false;
};
ExtremalReport dominant_extremal_uniqueness(const TensorSpec& spec);

struct SuiteItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Axioms, connectedness, simplicity of fundamentals and pairwise tensors, and the
// extremal-tensor criterion node by node; KN counts against module dimensions (type C).
std::vector<SuiteItem> crystal_suite(const AffineType& t, TensorRule rule);

// Defining relations of every fundamental, of pairwise tensors and of threefold
// tensors of V(w1), with twists +-q_s^m drawn from a seeded generator.
std::vector<SuiteItem> relation_suite(const AffineType& t, int max_factors, unsigned seed);

}  // namespace qaff
