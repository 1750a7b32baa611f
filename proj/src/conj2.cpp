#include "qaff/conj2.hpp"

namespace qaff {

namespace {

// Columns of B, as vectors in V_i, killed by v -> phi(v (x) u)
std::vector<RVec> cut(const std::vector<RVec>& B, const Conj2Step& st, int dim_i) {
  const int ds = st.source.dim() / dim_i;
  Mat<RatFunc> rows(static_cast<std::size_t>(st.phi.rows()), RVec(B.size()));
  for (std::size_t c = 0; c < B.size(); ++c) {
    RVec v(static_cast<std::size_t>(st.source.dim()));
    for (int x = 0; x < dim_i; ++x) v[static_cast<std::size_t>(x * ds)] = B[c][static_cast<std::size_t>(x)];
    RVec img = st.phi.apply(v);
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r][c] = img[r];
  }
  std::vector<RVec> out;
  for (const auto& x : nullspace(rows, B.size())) {
    RVec v(static_cast<std::size_t>(dim_i));
    for (std::size_t c = 0; c < B.size(); ++c)
      if (!x[c].is_zero())
        for (int k = 0; k < dim_i; ++k) v[static_cast<std::size_t>(k)] += x[c] * B[c][static_cast<std::size_t>(k)];
    out.push_back(std::move(v));
  }
  return out;
}

bool same_fundamental(int a, const RatFunc& ta, int b, const RatFunc& tb) {
  if (a != b) return false;
  return a == 0 || ta == tb;
}

}  // namespace

Conj2Report check_filtration(const Conj2Data& d, bool check_maps) {
  Conj2Report r;
  const UModule& V = d.Vi;
  const int dim = V.dim();
  const RootData& rd = V.root_data();
  Weight low = rd.zero() - rd.fundamental(d.istar);
  std::vector<RVec> B;
  for (int b = 0; b < dim; ++b)
    if (V.wt(b) != low) B.push_back(basis_vector(dim, b));
  r.F.push_back(B);
  r.dims.push_back(static_cast<int>(B.size()));
  r.cond2 = r.cond3 = r.cond4 = r.valuations = r.intertwiners = true;
  for (std::size_t mu = 0; mu < d.steps.size(); ++mu) {
    const Conj2Step& st = d.steps[mu];
    const std::string tag = "mu=" + std::to_string(mu + 1) + ": ";
    // (2) images of F_{mu-1} (x) u_s lie in V_t (x) w, w the top vector of W
    const int ds = st.source.dim() / dim, W = st.target.dim() / st.t_dim;
    for (const auto& v : B) {
      RVec x(static_cast<std::size_t>(st.source.dim()));
      for (int k = 0; k < dim; ++k) x[static_cast<std::size_t>(k * ds)] = v[static_cast<std::size_t>(k)];
      RVec img = st.phi.apply(x);
      for (int a = 0; a < st.target.dim(); ++a)
        if (!img[static_cast<std::size_t>(a)].is_zero() && a % W != 0) {
          r.cond2 = false;
          r.failures.push_back(tag + "image leaves V_t (x) w");
          break;
        }
    }
    if (same_fundamental(st.s, st.b, st.t, st.c)) {
      r.cond3 = false;
      r.failures.push_back(tag + "source and target factors isomorphic");
    }
    if (same_fundamental(st.s, st.b, st.w_index, st.w_twist)) {
      r.cond4 = false;
      r.failures.push_back(tag + "source factor is a component of W");
    }
    if (st.b.valuation() <= 0 || st.c.valuation() <= 0) {
      r.valuations = false;
      r.failures.push_back(tag + "twist outside q_s A");
    }
    if (check_maps && (st.phi.is_zero() || !is_intertwiner(st.phi, st.source, st.target))) {
      r.intertwiners = false;
      r.failures.push_back(tag + "phi is not a nonzero intertwiner");
    }
    B = cut(B, st, dim);
    r.F.push_back(B);
    r.dims.push_back(static_cast<int>(B.size()));
  }
  // (1) F_N is the highest line
  r.cond1 = B.size() == 1;
  if (r.cond1) {
    for (int b = 0; b < dim; ++b)
      if (!B[0][static_cast<std::size_t>(b)].is_zero() && V.wt(b) != rd.fundamental(d.i)) r.cond1 = false;
  }
  if (!r.cond1) r.failures.push_back("F_N is not the highest line");
  return r;
}

}  // namespace qaff
