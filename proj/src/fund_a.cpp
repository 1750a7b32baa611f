#include "qaff/fund_a.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qaff {

std::string subset_label(const std::vector<int>& elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? "," : "") + std::to_string(elems[i]);
  return s + "}";
}

std::vector<std::vector<int>> subsets_A(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

CrystalGraph subset_crystal(int n, int k) {
  RootData rd = RootData::A(n);
  auto subs = subsets_A(n, k);
  std::vector<std::string> labels;
  std::vector<Weight> wts;
  std::map<std::vector<int>, int> index;
  for (const auto& K : subs) {
    index[K] = static_cast<int>(labels.size());
    labels.push_back(subset_label(K));
    Weight w = rd.zero();
    for (int i = 1; i < n; ++i) {
      bool a = std::binary_search(K.begin(), K.end(), i), b = std::binary_search(K.begin(), K.end(), i + 1);
      w.c[static_cast<std::size_t>(i - 1)] = int(a) - int(b);
    }
    wts.push_back(w);
  }
  CrystalGraph B(rd, labels, wts);
  for (int i = 0; i < n; ++i) {
    int lo = i == 0 ? n : i, hi = i == 0 ? 1 : i + 1;
    for (const auto& K : subs) {
      bool has_lo = std::binary_search(K.begin(), K.end(), lo), has_hi = std::binary_search(K.begin(), K.end(), hi);
      if (has_lo && !has_hi) {
        std::vector<int> L = K;
        *std::find(L.begin(), L.end(), lo) = hi;
        std::sort(L.begin(), L.end());
        B.set_arrow(i, index.at(K), index.at(L));
      }
    }
  }
  return B;
}

int psi(const std::vector<int>& J, const std::vector<int>& K) {
  int c = 0;
  for (int v : J)
    for (int m : K) c += v > m;
  return c;
}

}  // namespace

CrystalGraph build_crystal_A(int n, int k) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range");
  return subset_crystal(n, k);
}

UModule module_A(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  return module_from_crystal(subset_crystal(n, k), "V" + std::to_string(k));
}

RMat embed_i(int n, int j, int k) {
  if (j < 0 || k < 0 || j + k > n) throw std::invalid_argument("j + k out of range");
  auto src = subsets_A(n, j + k), J = subsets_A(n, j), K = subsets_A(n, k);
  RMat m(static_cast<int>(J.size() * K.size()), static_cast<int>(src.size()));
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = 0; b < K.size(); ++b) {
      std::vector<int> u;
      std::set_union(J[a].begin(), J[a].end(), K[b].begin(), K[b].end(), std::back_inserter(u));
      if (static_cast<int>(u.size()) != j + k) continue;
      auto c = std::lower_bound(src.begin(), src.end(), u) - src.begin();
      m.set(static_cast<int>(a * K.size() + b), static_cast<int>(c), RatFunc::neg_q(psi(J[a], K[b])));
    }
  return m;
}

RMat project_p(int n, int j, int k) {
  if (j < 0 || k < 0 || j + k > n) throw std::invalid_argument("j + k out of range");
  auto tgt = subsets_A(n, j + k), J = subsets_A(n, j), K = subsets_A(n, k);
  RMat m(static_cast<int>(tgt.size()), static_cast<int>(J.size() * K.size()));
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = 0; b < K.size(); ++b) {
      std::vector<int> u;
      std::set_union(J[a].begin(), J[a].end(), K[b].begin(), K[b].end(), std::back_inserter(u));
      if (static_cast<int>(u.size()) != j + k) continue;
      auto c = std::lower_bound(tgt.begin(), tgt.end(), u) - tgt.begin();
      m.set(static_cast<int>(c), static_cast<int>(a * K.size() + b), RatFunc::neg_q(psi(J[a], K[b])));
    }
  return m;
}

UModule embed_target(int n, int j, int k) {
  return tensor(twist(module_A(n, j), RatFunc::neg_q(k)), twist(module_A(n, k), RatFunc::neg_q(-j)));
}

UModule project_source(int n, int j, int k) {
  return tensor(twist(module_A(n, j), RatFunc::neg_q(-k)), twist(module_A(n, k), RatFunc::neg_q(j)));
}

}  // namespace qaff

namespace qaff {

Conj2Data conj2_maps_A(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("i out of range");
  Conj2Data d;
  d.n = n;
  d.i = i;
  d.istar = n - i;
  d.Vi = module_A(n, i);
  UModule Vt = module_A(n, i + 1);
  RMat p = project_p(n, i, 1);
  for (int mu = 1; mu <= i; ++mu) {
    Conj2Step st;
    st.s = mu;
    st.t = i + 1;
    st.t_dim = Vt.dim();
    st.b = RatFunc::neg_q(i - mu + 2);
    st.c = RatFunc::neg_q(1);
    st.w_index = mu - 1;
    st.w_twist = RatFunc::neg_q(i - mu + 1);
    UModule W = module_A(n, mu - 1);
    st.source = tensor(d.Vi, twist(module_A(n, mu), st.b));
    st.target = tensor(twist(Vt, st.c), twist(W, st.w_twist));
    st.phi = kron(p, RMat::identity(W.dim())) * kron(RMat::identity(d.Vi.dim()), embed_i(n, 1, mu - 1));
    d.steps.push_back(std::move(st));
  }
  return d;
}

}  // namespace qaff
