#pragma once
// Finite-dimensional modules over U'_q(g): generator matrices, twists,
// tensor products, relation checks, submodule closure and intertwiners.

#include "qaff/birat.hpp"
#include "qaff/linalg.hpp"
#include "qaff/modp.hpp"
#include "qaff/rootdata.hpp"
#include "qaff/sparse.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qaff {

using RMat = SparseMatrix<RatFunc>;
using RVec = Vec<RatFunc>;

// Sum over d of z^d * part(d).
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
  ZMatrix(const RMat& m) : rows_(m.rows()), cols_(m.cols()) { add_part(0, m); }  // NOLINT

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<int, RMat>& parts() const { return p_; }
  void add_part(int d, const RMat& m);
  bool is_zero() const { return p_.empty(); }
  bool is_constant() const { return p_.empty() || (p_.size() == 1 && p_.begin()->first == 0); }
  RMat part(int d) const;

  ZMatrix shifted(int d) const;  // times z^d
  ZMatrix scaled(const RatFunc& c) const;
  ZMatrix transpose() const;
  RMat eval(const RatFunc& z) const;
  SparseMatrix<Fp> eval_mod(Fp qs, Fp z) const;
  ZPoly entry(int i, int j) const;

  friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
  friend ZMatrix operator+(const ZMatrix& a, const ZMatrix& b);
  friend ZMatrix operator-(const ZMatrix& a, const ZMatrix& b);
  friend bool operator==(const ZMatrix& a, const ZMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::map<int, RMat> p_;  // no zero parts
};

ZMatrix kron(const ZMatrix& a, const ZMatrix& b);
SparseMatrix<Fp> eval_mod(const RMat& m, Fp qs);

class UModule {
 public:
  UModule() = default;
  UModule(RootData rd, std::vector<std::string> labels, std::vector<Weight> wts, std::string name = "M");

  const RootData& root_data() const { return *rd_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int b) const { return labels_[static_cast<std::size_t>(b)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Weight& wt(int b) const { return wts_[static_cast<std::size_t>(b)]; }
  const std::vector<Weight>& weights() const { return wts_; }
  int find(const std::string& label) const;

  const ZMatrix& E(int i) const { return e_[static_cast<std::size_t>(i)]; }
  const ZMatrix& F(int i) const { return f_[static_cast<std::size_t>(i)]; }
  void set_E(int i, ZMatrix m);
  void set_F(int i, ZMatrix m);
  // Diagonal of t_i^k.
  std::vector<RatFunc> t_diag(int i, int k = 1) const;
  RMat T(int i, int k = 1) const { return RMat::diagonal(t_diag(i, k)); }
  bool formal() const;

  // Weight spaces in ascending weight order; basis indices ascending.
  const std::map<Weight, std::vector<int>>& weight_spaces() const { return spaces_; }
  std::vector<int> weight_space(const Weight& w) const;

 private:
  std::optional<RootData> rd_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Weight> wts_;
  std::vector<ZMatrix> e_, f_;
  std::map<Weight, std::vector<int>> spaces_;
};

UModule trivial_module(const RootData& rd);
class CrystalGraph;
// Coefficient-one transport along the arrows of a crystal.
UModule module_from_crystal(const CrystalGraph& b, const std::string& name);
// E_0 -> a E_0, F_0 -> a^{-1} F_0.
UModule twist(const UModule& m, const RatFunc& a);
// E_0 -> z^d E_0, F_0 -> z^{-d} F_0 with z formal.
UModule twist_formal(const UModule& m, int d = 1);
UModule specialize(const UModule& m, const RatFunc& z);
// Coproduct: e -> e (x) t^{-1} + 1 (x) e, f -> f (x) 1 + t (x) f.
UModule tensor(const UModule& a, const UModule& b);
// Submodule spanned by the columns of basis (a weight-graded basis), expressed on that basis.
UModule restrict_to(const UModule& m, const std::vector<RVec>& basis, const std::vector<std::string>& labels,
                    const std::string& name);

struct RelationReport {
  std::vector<std::string> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
};
RelationReport check_relations(const UModule& m);

// Generator list used by closures: E_0..E_{N-1}, F_0..F_{N-1}.
template <class T>
struct Action {
  int dim = 0;
  std::vector<int> space_of, pos;
  std::vector<std::vector<int>> spaces;
  std::vector<SparseMatrix<T>> cols;  // cols[g].row(j) = column j of generator g
};
Action<RatFunc> action_exact(const UModule& m, bool transposed = false);
Action<Fp> action_mod(const UModule& m, Fp qs, Fp z, bool transposed = false);

// Weight-graded closure of the start vectors under all generators.
template <class T>
std::vector<Echelon<T>> closure(const Action<T>& a, const std::vector<Vec<T>>& start);
template <class T>
int closure_dim(const Action<T>& a, const std::vector<Vec<T>>& start);

// Dimension of the submodule generated by v (spectral parameters specialized).
int generated_dim(const UModule& m, const RVec& v);
std::vector<RVec> generated_submodule(const UModule& m, const RVec& v);
// Whether v generates m; whether every nonzero submodule contains the basis
// vector b (b must span its weight space).
bool is_cyclic(const UModule& m, const RVec& v);
bool is_cocyclic(const UModule& m, int b);
RVec basis_vector(int dim, int b);

std::vector<RVec> classical_hw_vectors(const UModule& m, const Weight& lambda);
// For each dominant weight lambda: the vectors of weight lambda whose generated
// submodule stays inside the convex hull of W lambda.
std::map<Weight, std::vector<RVec>> dominant_extremal_vectors(const UModule& m);

// Basis of Hom(S, T) for specialized modules.
std::vector<RMat> hom_space(const UModule& s, const UModule& t);
// Mod-p upper bound for dim Hom(S, T).
int hom_dim_bound(const UModule& s, const UModule& t);
bool is_intertwiner(const RMat& x, const UModule& s, const UModule& t);

struct DualityResult {
  int partner = -1;                 // j with V(varpi_i) (x) V(varpi_j)_{z0} -> k
  std::vector<RatFunc> tr_twists;   // all twists in range admitting tr
  std::vector<RatFunc> iota_twists; // all twists admitting iota: k -> V_j,z0 (x) V_i
  RatFunc z0;
  RMat tr, iota;
  RatFunc composite;  // tr o (id (x) ...) scalar, reported
};
// modules[j] = V(varpi_j) for the fundamental indices 1..rank (index 0 unused).
DualityResult duality_solve(const std::vector<UModule>& modules, int i, int max_exp);

RVec apply(const RMat& m, const RVec& v);
std::string vec_string(const UModule& m, const RVec& v);

}  // namespace qaff
