#pragma once
// Finite regular crystals of level zero.

#include "qaff/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qaff {

// Kashiwara: act on the left factor when phi(b1) > eps(b2) (f) / >= (e).
// Mirrored: the same rule with the factors exchanged.
enum class TensorRule { Kashiwara, Mirrored };
std::string rule_name(TensorRule r);

class CrystalGraph {
 public:
  CrystalGraph(RootData rd, std::vector<std::string> labels, std::vector<Weight> wts);

  const RootData& root_data() const { return rd_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int b) const { return labels_[static_cast<std::size_t>(b)]; }
  const Weight& wt(int b) const { return wt_[static_cast<std::size_t>(b)]; }
  int find(const std::string& label) const;

  // f_i b = c, equivalently e_i c = b.
  void set_arrow(int i, int b, int c);
  int e(int i, int b) const { return e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]; }
  int f(int i, int b) const { return f_[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]; }
  int eps(int i, int b) const;
  int phi(int i, int b) const;
  int e_max(int i, int b) const;
  int f_pow(int i, int b, int k) const;
  int e_pow(int i, int b, int k) const;

  // Violations of the crystal axioms (empty when regular).
  std::vector<std::string> check_axioms() const;
  std::string to_dot(const std::string& name = "B") const;

  // Component factors when built by tensor(), else empty.
  std::vector<std::pair<int, int>> factors;

 private:
  RootData rd_;
  std::vector<std::string> labels_;
  std::vector<Weight> wt_;
  std::vector<std::vector<int>> e_, f_;
};

CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b, TensorRule rule = TensorRule::Kashiwara);
CrystalGraph disjoint_union(const CrystalGraph& a, const CrystalGraph& b);

int weyl_action(const CrystalGraph& B, int i, int b);
std::vector<int> weyl_orbit(const CrystalGraph& B, int b);
bool is_i_extremal(const CrystalGraph& B, int i, int b);
bool is_extremal(const CrystalGraph& B, int b);
// Closure of b under all e_i^max.
std::vector<int> emax_closure(const CrystalGraph& B, int b);
int extremalize(const CrystalGraph& B, int b);
bool is_connected(const CrystalGraph& B);

struct SimplicityReport {
  bool simple = false;
  bool hull = false, unique = false, extremal_orbit = false;
  Weight lambda;
  std::string reason;
};
SimplicityReport is_simple(const CrystalGraph& B);

bool same_chamber(const RootData& rd, const Weight& a, const Weight& b);
// mu dominated by lambda in the sense of convex hulls of W_cl-orbits.
bool in_hull(const RootData& rd, const Weight& lambda, const Weight& mu);
// Word i_1..i_N, mu = s_{i_N}...s_{i_1} lambda, each step with positive pairing.
std::vector<int> raising_word(const RootData& rd, const Weight& lambda, const Weight& mu);

}  // namespace qaff
