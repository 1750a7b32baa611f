#include "qaff/fund_c.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qaff {

int kn_rank(int n, int letter) { return letter > 0 ? letter : 2 * n + 1 + letter; }

std::string kn_letter(int letter) { return letter > 0 ? std::to_string(letter) : std::to_string(-letter) + "b"; }

std::string column_label(const std::vector<int>& col) {
  std::string s = "(";
  for (std::size_t i = 0; i < col.size(); ++i) s += (i ? "," : "") + kn_letter(col[i]);
  return s + ")";
}

bool kn_admissible(int n, const std::vector<int>& col) {
  const int k = static_cast<int>(col.size());
  for (int i = 0; i + 1 < k; ++i)
    if (kn_rank(n, col[static_cast<std::size_t>(i)]) >= kn_rank(n, col[static_cast<std::size_t>(i + 1)])) return false;
  // positions are 1-based in the height condition
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (col[static_cast<std::size_t>(i)] > 0 && col[static_cast<std::size_t>(j)] == -col[static_cast<std::size_t>(i)] &&
          (i + 1) + (k - (j + 1) + 1) > col[static_cast<std::size_t>(i)])
        return false;
  return true;
}

std::vector<std::vector<int>> kn_columns(int n, int k) {
  std::vector<int> letters;
  for (int a = 1; a <= n; ++a) letters.push_back(a);
  for (int a = n; a >= 1; --a) letters.push_back(-a);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      if (kn_admissible(n, cur)) out.push_back(cur);
      return;
    }
    for (std::size_t p = start; p < letters.size(); ++p) {
      cur.push_back(letters[p]);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// +1, -1 or 0 per the signature rule at i != 0
int sign_of(int n, int i, int letter) {
  if (letter == i || (i < n && letter == -(i + 1))) return +1;
  if (letter == -i || (i < n && letter == i + 1)) return -1;
  return 0;
}

int lower_letter(int n, int i, int letter) {
  if (letter == i) return i == n ? -n : i + 1;
  return -i;  // letter == -(i+1)
}

}  // namespace

CrystalGraph build_crystal_C(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  RootData rd = RootData::C(n);
  auto cols = kn_columns(n, k);
  std::vector<std::string> labels;
  std::vector<Weight> wts;
  std::map<std::vector<int>, int> index;
  for (const auto& c : cols) {
    index[c] = static_cast<int>(labels.size());
    labels.push_back(column_label(c));
    Weight w = rd.zero();
    for (int x : c) w.c[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    wts.push_back(w);
  }
  CrystalGraph B(rd, labels, wts);
  auto lookup = [&](const std::vector<int>& c) {
    auto it = index.find(c);
    if (it == index.end()) throw std::logic_error("signature rule left the KN set at " + column_label(c));
    return it->second;
  };
  for (const auto& c : cols) {
    for (int i = 1; i <= n; ++i) {
      // unmatched plus positions after +- cancellation
      std::vector<std::size_t> stack_plus;
      for (std::size_t p = 0; p < c.size(); ++p) {
        int s = sign_of(n, i, c[p]);
        if (s > 0)
          stack_plus.push_back(p);
        else if (s < 0) {
          if (!stack_plus.empty()) stack_plus.pop_back();
        }
      }
      if (!stack_plus.empty()) {
        std::vector<int> d = c;
        std::size_t p = stack_plus.front();
        d[p] = lower_letter(n, i, d[p]);
        B.set_arrow(i, index.at(c), lookup(d));
      }
    }
    if (c.back() == -1) {
      std::vector<int> d{1};
      d.insert(d.end(), c.begin(), c.end() - 1);
      B.set_arrow(0, index.at(c), lookup(d));
    }
  }
  return B;
}

}  // namespace qaff

// ---------------------------------------------------------------- modules

namespace qaff {

UModule vector_module_C(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return module_from_crystal(build_crystal_C(n, 1), "V1");
}

UModule fused_module_C(int n, int k, const UModule& prev) {
  if (k < 2 || k > n) throw std::invalid_argument("k out of range");
  const RootData rd = RootData::C(n);
  UModule amb = tensor(twist(module_C(n, 1), RatFunc::neg_s(k - 1)), twist(prev, RatFunc::neg_s(-1)));
  auto hw = classical_hw_vectors(amb, rd.fundamental(k));
  if (hw.size() != 1) throw std::runtime_error("hw space not 1-dimensional");
  RVec top = hw[0];
  std::vector<int> rest(static_cast<std::size_t>(k - 1));
  for (int a = 0; a < k - 1; ++a) rest[static_cast<std::size_t>(a)] = a + 2;
  int anchor = amb.find("(1)⊗" + column_label(rest));
  RatFunc c = anchor >= 0 ? top[static_cast<std::size_t>(anchor)] : RatFunc(0);
  if (c.is_zero())
    for (const auto& x : top)
      if (!x.is_zero()) {
        c = x;
        break;
      }
  for (auto& x : top) x = x * c.inverse();

  CrystalGraph B = build_crystal_C(n, k);
  if (generated_dim(amb, top) != B.size()) throw std::runtime_error("dimension mismatch");

  // crystal-indexed vectors
  std::vector<RVec> vec(static_cast<std::size_t>(B.size()));
  std::vector<char> done(static_cast<std::size_t>(B.size()), 0);
  const int hi = B.find(column_label(kn_columns(n, k).front()));
  vec[static_cast<std::size_t>(hi)] = top;
  done[static_cast<std::size_t>(hi)] = 1;
  auto get = [&](auto&& self, int b) -> const RVec& {
    if (done[static_cast<std::size_t>(b)]) return vec[static_cast<std::size_t>(b)];
    int i = 1;
    while (B.eps(i, b) == 0) ++i;
    int e = B.eps(i, b);
    RVec v = self(self, B.e_pow(i, b, e));
    RMat f = amb.F(i).part(0);
    for (int j = 0; j < e; ++j) v = f.apply(v);
    RatFunc s = RatFunc::qfact(e, rd.qi_exp(i)).inverse();
    for (auto& x : v) x = x * s;
    vec[static_cast<std::size_t>(b)] = std::move(v);
    done[static_cast<std::size_t>(b)] = 1;
    return vec[static_cast<std::size_t>(b)];
  };
  std::map<Weight, Echelon<RatFunc>> indep;
  bool crystal_basis = true;
  for (int b = 0; b < B.size(); ++b) {
    const RVec& v = get(get, b);
    auto it = indep.try_emplace(B.wt(b), static_cast<std::size_t>(amb.dim())).first;
    if (is_zero_vec(v) || !it->second.add(v)) crystal_basis = false;
  }
  std::vector<std::string> labels;
  for (int b = 0; b < B.size(); ++b) labels.push_back(B.label(b));
  if (!crystal_basis) {
    // echelon fallback: closure basis per weight, labelled in crystal order
    auto sub = generated_submodule(amb, top);
    std::map<Weight, std::vector<RVec>> by_wt;
    for (auto& v : sub) {
      for (int x = 0; x < amb.dim(); ++x)
        if (!v[static_cast<std::size_t>(x)].is_zero()) {
          by_wt[amb.wt(x)].push_back(v);
          break;
        }
    }
    for (int b = 0; b < B.size(); ++b) {
      auto& l = by_wt[B.wt(b)];
      if (l.empty()) throw std::runtime_error("dimension mismatch");
      vec[static_cast<std::size_t>(b)] = l.front();
      l.erase(l.begin());
    }
  }
  UModule m = restrict_to(amb, vec, labels, "V" + std::to_string(k));
  for (int b = 0; b < B.size(); ++b)
    if (m.wt(b) != B.wt(b)) throw std::runtime_error("weight mismatch at " + B.label(b));
  return m;
}

const UModule& module_C(int n, int k) {
  static std::map<std::pair<int, int>, UModule> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  UModule m = k == 0 ? trivial_module(RootData::C(n))
              : k == 1 ? vector_module_C(n)
                       : fused_module_C(n, k, module_C(n, k - 1));
  std::lock_guard<std::mutex> g(mu);
  return cache.try_emplace({n, k}, std::move(m)).first->second;
}

namespace {

std::vector<int> range_col(int from, int to) {
  std::vector<int> c;
  for (int a = from; a <= to; ++a) c.push_back(a);
  return c;
}

// index in the tensor basis of (1..mu) (x) (mu+1..mu+nu)
int anchor_index(int mu, int nu, const UModule& a, const UModule& b) {
  int x = mu == 0 ? 0 : a.find(column_label(range_col(1, mu)));
  int y = nu == 0 ? 0 : b.find(column_label(range_col(mu + 1, mu + nu)));
  if (x < 0 || y < 0) throw std::logic_error("anchor not found");
  return x * b.dim() + y;
}

RMat scaled_at(const RMat& m, int r, int c) {
  RatFunc v = m.get(r, c);
  if (v.is_zero()) throw std::runtime_error("normalization vector annihilated");
  return m.scaled(v.inverse());
}

}  // namespace

IPMaps solve_ip_C(int n, int mu, int nu) {
  if (mu < 0 || nu < 0 || mu + nu > n) throw std::invalid_argument("mu + nu out of range");
  const UModule &A = module_C(n, mu), &Bm = module_C(n, nu), &S = module_C(n, mu + nu);
  IPMaps r;
  UModule tgt = tensor(twist(A, RatFunc::neg_s(nu)), twist(Bm, RatFunc::neg_s(-mu)));
  UModule src = tensor(twist(A, RatFunc::neg_s(-nu)), twist(Bm, RatFunc::neg_s(mu)));
  auto hi = hom_space(S, tgt), hp = hom_space(src, S);
  r.hom_i = static_cast<int>(hi.size());
  r.hom_p = static_cast<int>(hp.size());
  if (r.hom_i != 1) throw std::runtime_error("hom space dimension != 1 (i: " + std::to_string(r.hom_i) + ")");
  if (r.hom_p != 1) throw std::runtime_error("hom space dimension != 1 (p: " + std::to_string(r.hom_p) + ")");
  int a = anchor_index(mu, nu, A, Bm);
  r.i = scaled_at(hi[0], a, 0);
  r.p = scaled_at(hp[0], 0, a);
  return r;
}

RMat trace_C(int n) {
  const UModule& V = module_C(n, 1);
  auto h = hom_space(tensor(V, twist(V, RatFunc::s(2 * n + 2))), trivial_module(RootData::C(n)));
  if (h.size() != 1) throw std::runtime_error("hom space dimension != 1 (tr)");
  const auto& row = h[0].row(0);
  return h[0].scaled(row.front().second.inverse());
}

Conj2Data conj2_maps_C(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("i out of range");
  Conj2Data d;
  d.n = n;
  d.i = d.istar = i;
  d.Vi = module_C(n, i);
  const UModule& V1 = module_C(n, 1);
  // p_i : V_i (x) V_1,(-q_s)^{e} -> V_t,(-q_s)
  RMat p;
  int t, e;
  if (i < n) {
    p = solve_ip_C(n, i, 1).p;
    t = i + 1;
    e = i + 1;
  } else {
    RMat in = solve_ip_C(n, n - 1, 1).i;  // V_n -> V_{n-1} (x) V_1
    RMat tr = trace_C(n);
    const UModule& Vt = module_C(n, n - 1);
    RMat step1 = kron(in, RMat::identity(V1.dim()));
    RMat step2 = kron(RMat::identity(Vt.dim()), tr);
    p = step2 * step1;
    t = n - 1;
    e = n + 3;
  }
  const UModule& Vt = module_C(n, t);
  for (int mu = 1; mu <= i; ++mu) {
    Conj2Step st;
    st.s = mu;
    st.t = t;
    st.t_dim = Vt.dim();
    st.b = RatFunc::neg_s(e + 1 - mu);
    st.c = RatFunc::neg_s(1);
    st.w_index = mu - 1;
    st.w_twist = RatFunc::neg_s(e - mu);
    const UModule& Vs = module_C(n, mu);
    const UModule& W = module_C(n, mu - 1);
    st.source = tensor(d.Vi, twist(Vs, st.b));
    st.target = tensor(twist(Vt, st.c), twist(W, st.w_twist));
    RMat im = solve_ip_C(n, 1, mu - 1).i;  // V_mu -> V_1 (x) W
    st.phi = kron(p, RMat::identity(W.dim())) * kron(RMat::identity(d.Vi.dim()), im);
    d.steps.push_back(std::move(st));
  }
  return d;
}

}  // namespace qaff
