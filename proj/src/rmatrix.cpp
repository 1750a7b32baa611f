#include "qaff/rmatrix.hpp"

#include "qaff/crystal.hpp"
#include "qaff/fund_a.hpp"
#include "qaff/fund_c.hpp"
#include "qaff/kernels.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qaff {

const UModule& fundamental_module(const AffineType& t, int k) {
  if (t.family == Family::C) return module_C(t.n, k);
  static std::map<std::pair<int, int>, UModule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> g(mu);
  auto it = cache.find({t.n, k});
  if (it == cache.end()) it = cache.emplace(std::make_pair(t.n, k), module_A(t.n, k)).first;
  return it->second;
}

namespace {

const Fp kQs[] = {Fp(1000003), Fp(2718281829), Fp(3141592653), Fp(1618033988)};
const Fp kZ[] = {Fp(998244353), Fp(1234567891), Fp(577215664), Fp(1414213562)};

Vec<Fp> vec_mod(const RVec& v, Fp qs) {
  Vec<Fp> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[k] = eval_mod(v[k], qs);
  return out;
}

int leading_index(const RVec& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return static_cast<int>(k);
  throw std::invalid_argument("zero vector");
}

void scale_at(RVec& v, int k) {
  RatFunc c = v[static_cast<std::size_t>(k)];
  if (c.is_zero()) c = v[static_cast<std::size_t>(leading_index(v))];
  RatFunc inv = c.inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
}

// Lowering words from a highest weight vector: node k = F_{gen[k]} node parent[k].
struct Tree {
  std::vector<int> parent, gen;
  std::vector<Weight> wt;
  int size() const { return static_cast<int>(parent.size()); }
};

Tree lowering_tree(const UModule& m, const RVec& h, Fp qs) {
  const RootData& rd = m.root_data();
  std::vector<SparseMatrix<Fp>> F(static_cast<std::size_t>(rd.num_nodes()));
  for (int i = 1; i < rd.num_nodes(); ++i) F[static_cast<std::size_t>(i)] = eval_mod(m.F(i).part(0), qs);
  Tree t;
  std::vector<Vec<Fp>> vecs;
  std::map<Weight, Echelon<Fp>> ech;
  Weight w0 = m.wt(leading_index(h));
  vecs.push_back(vec_mod(h, qs));
  t.parent.push_back(-1);
  t.gen.push_back(0);
  t.wt.push_back(w0);
  ech.try_emplace(w0, static_cast<std::size_t>(m.dim())).first->second.add(vecs[0]);
  for (int k = 0; k < t.size(); ++k)
    for (int i = 1; i < rd.num_nodes(); ++i) {
      Vec<Fp> w = spmv_mod(F[static_cast<std::size_t>(i)], vecs[static_cast<std::size_t>(k)], Exec::Serial);
      if (is_zero_vec(w)) continue;
      Weight nw = t.wt[static_cast<std::size_t>(k)] - rd.alpha(i);
      auto& e = ech.try_emplace(nw, static_cast<std::size_t>(m.dim())).first->second;
      if (!e.add(w)) continue;
      vecs.push_back(std::move(w));
      t.parent.push_back(k);
      t.gen.push_back(i);
      t.wt.push_back(nw);
    }
  return t;
}

std::vector<RVec> tree_vectors(const UModule& m, const Tree& t, const RVec& h) {
  std::vector<RMat> F(static_cast<std::size_t>(m.root_data().num_nodes()));
  for (int i = 1; i < m.root_data().num_nodes(); ++i) F[static_cast<std::size_t>(i)] = m.F(i).part(0);
  std::vector<RVec> out(static_cast<std::size_t>(t.size()));
  out[0] = h;
  for (int k = 1; k < t.size(); ++k)
    out[static_cast<std::size_t>(k)] =
        F[static_cast<std::size_t>(t.gen[static_cast<std::size_t>(k)])].apply(out[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(k)])]);
  return out;
}

ZPoly lcm(const ZPoly& a, const ZPoly& b) {
  if (a.is_constant()) return b.monic();
  if (b.is_constant()) return a.monic();
  return exact_div(a * b, gcd(a, b)).monic();
}

ZPoly linear(const RatFunc& root) { return ZPoly::z() - ZPoly(root); }

BiRat mobius(const RatFunc& c) {
  // (1 - c z) / (z - c)
  return BiRat(ZPoly(1) - ZPoly(c, 1), linear(c));
}

bool is_unit(const BiRat& u) { return !u.is_zero() && u.den().is_constant() && u.num().is_monomial(); }

}  // namespace

// ---------------------------------------------------------------- solve_R

RMatrixResult solve_R(const UModule& V, const UModule& W) {
  if (V.root_data().type() != W.root_data().type()) throw std::invalid_argument("type mismatch");
  if (V.formal() || W.formal()) throw std::invalid_argument("solve_R needs specialized factors");
  const RootData& rd = V.root_data();
  RMatrixResult res;
  res.V = V;
  res.W = W;
  UModule S = tensor(V, twist_formal(W)), T = tensor(twist_formal(W), V);
  const int dS = S.dim(), dV = V.dim(), dW = W.dim();
  auto flip = [&](int x) { return (x % dW) * dV + x / dW; };

  // classical highest weight vectors
  for (const auto& [lam, idx] : S.weight_spaces()) {
    if (!rd.is_dominant(lam)) continue;
    auto hs = classical_hw_vectors(S, lam);
    if (hs.empty()) continue;
    auto ht = classical_hw_vectors(T, lam);
    if (ht.size() != hs.size()) throw std::logic_error("classical multiplicities differ at " + lam.to_string());
    for (std::size_t a = 0; a < hs.size(); ++a) {
      scale_at(hs[a], leading_index(hs[a]));
      scale_at(ht[a], flip(leading_index(hs[a])));
    }
    res.hw_source[lam] = std::move(hs);
    res.hw_target[lam] = std::move(ht);
  }

  // lowering words shared by all copies of a component
  std::map<Weight, Tree> trees;
  bool complete = false;
  for (Fp qs : kQs) {
    trees.clear();
    int total = 0;
    for (const auto& [lam, hs] : res.hw_source) {
      trees[lam] = lowering_tree(S, hs[0], qs);
      total += trees[lam].size() * static_cast<int>(hs.size());
    }
    if (total == dS) {
      complete = true;
      break;
    }
  }
  if (!complete) throw std::runtime_error("classical decomposition does not span the tensor product");

  struct Col {
    Weight lam;
    int copy, node;
  };
  std::map<Weight, std::vector<Col>> cols;  // by weight
  std::map<Weight, std::vector<std::vector<RVec>>> svec, tvec;
  for (const auto& [lam, hs] : res.hw_source) {
    const Tree& t = trees.at(lam);
    for (std::size_t a = 0; a < hs.size(); ++a) {
      svec[lam].push_back(tree_vectors(S, t, hs[a]));
      tvec[lam].push_back(tree_vectors(T, t, res.hw_target.at(lam)[a]));
      for (int k = 0; k < t.size(); ++k) cols[t.wt[static_cast<std::size_t>(k)]].push_back({lam, static_cast<int>(a), k});
    }
  }

  // component maps
  std::map<std::tuple<Weight, int, int>, int> comp_index;
  for (const auto& [lam, hs] : res.hw_source)
    for (std::size_t a = 0; a < hs.size(); ++a)
      for (std::size_t b = 0; b < hs.size(); ++b) {
        comp_index[{lam, static_cast<int>(a), static_cast<int>(b)}] = static_cast<int>(res.comps.size());
        res.comps.push_back({lam, static_cast<int>(a), static_cast<int>(b), RMat(T.dim(), dS), BiRat()});
      }
  for (const auto& [mu, cl] : cols) {
    std::vector<int> srows = S.weight_space(mu), trows = T.weight_space(mu);
    if (srows.size() != cl.size()) throw std::logic_error("weight block not square at " + mu.to_string());
    Mat<RatFunc> blk(srows.size(), RVec(cl.size()));
    for (std::size_t c = 0; c < cl.size(); ++c) {
      const RVec& v = svec[cl[c].lam][static_cast<std::size_t>(cl[c].copy)][static_cast<std::size_t>(cl[c].node)];
      for (std::size_t r = 0; r < srows.size(); ++r) blk[r][c] = v[static_cast<std::size_t>(srows[r])];
    }
    auto inv = inverse(blk);
    if (!inv) throw std::logic_error("lowering vectors dependent at " + mu.to_string());
    for (std::size_t c = 0; c < cl.size(); ++c) {
      const Col& col = cl[c];
      const int m = static_cast<int>(res.hw_source.at(col.lam).size());
      for (int b = 0; b < m; ++b) {
        const RVec& tv = tvec[col.lam][static_cast<std::size_t>(b)][static_cast<std::size_t>(col.node)];
        RMat& P = res.comps[static_cast<std::size_t>(comp_index.at({col.lam, col.copy, b}))].P;
        for (int tr : trows) {
          const RatFunc& x = tv[static_cast<std::size_t>(tr)];
          if (x.is_zero()) continue;
          for (std::size_t r = 0; r < srows.size(); ++r) {
            const RatFunc& y = (*inv)[c][r];
            if (!y.is_zero()) P.add(tr, srows[r], x * y);
          }
        }
      }
    }
  }
  for (const auto& cp : res.comps)
    for (int i = 1; i < rd.num_nodes(); ++i)
      if (!(cp.P * S.E(i).part(0) == T.E(i).part(0) * cp.P) || !(cp.P * S.F(i).part(0) == T.F(i).part(0) * cp.P))
        throw std::logic_error("component map is not classical");

  // affine constraints from E_0 and F_0
  const int P = static_cast<int>(res.comps.size());
  std::vector<ZMatrix> CE, CF;
  for (const auto& cp : res.comps) {
    ZMatrix Z(cp.P);
    CE.push_back(Z * S.E(0) - T.E(0) * Z);
    CF.push_back(Z * S.F(0) - T.F(0) * Z);
  }
  std::vector<std::tuple<int, int, int>> pick;
  int best = P + 1;
  for (int trial = 0; trial < 4 && best != 1; ++trial) {
    ModpRows re = eval_rows_mod(CE, kQs[trial], kZ[trial]), rf = eval_rows_mod(CF, kQs[trial], kZ[trial]);
    SparseSystem<Fp> sys(P);
    std::vector<std::tuple<int, int, int>> chosen;
    for (int g = 0; g < 2; ++g) {
      const ModpRows& mr = g == 0 ? re : rf;
      for (std::size_t k = 0; k < mr.rows.size(); ++k)
        if (sys.add(mr.rows[k])) chosen.emplace_back(g, mr.keys[k].first, mr.keys[k].second);
    }
    if (P - sys.rank() < best) {
      best = P - sys.rank();
      pick = chosen;
    }
  }
  if (best != 1) throw std::runtime_error("hom space dimension != 1 (" + std::to_string(best) + ")");
  Mat<BiRat> M;
  for (const auto& [g, r, c] : pick) {
    Vec<BiRat> row(static_cast<std::size_t>(P));
    for (int p = 0; p < P; ++p) row[static_cast<std::size_t>(p)] = BiRat((g == 0 ? CE : CF)[static_cast<std::size_t>(p)].entry(r, c));
    M.push_back(std::move(row));
  }
  auto ns = nullspace(M, static_cast<std::size_t>(P));
  if (ns.size() != 1) throw std::runtime_error("hom space dimension != 1 (" + std::to_string(ns.size()) + ")");
  const int top = comp_index.at({V.wt(0) + W.wt(0), 0, 0});
  BiRat g0 = ns[0][static_cast<std::size_t>(top)];
  if (g0.is_zero()) throw std::runtime_error("normalization vector annihilated");
  BiRat ginv = g0.inverse();
  ZPoly d(1);
  for (int p = 0; p < P; ++p) {
    res.comps[static_cast<std::size_t>(p)].gamma = ns[0][static_cast<std::size_t>(p)] * ginv;
    if (!res.comps[static_cast<std::size_t>(p)].gamma.is_zero()) d = lcm(d, res.comps[static_cast<std::size_t>(p)].gamma.den());
  }
  res.denominator = d.monic();
  std::vector<ZPoly> a(static_cast<std::size_t>(P));
  for (int p = 0; p < P; ++p) {
    const BiRat& gm = res.comps[static_cast<std::size_t>(p)].gamma;
    if (!gm.is_zero()) a[static_cast<std::size_t>(p)] = exact_div(res.denominator, gm.den()) * gm.num();
  }
  if (!combination_vanishes(a, CE) || !combination_vanishes(a, CF))
    throw std::runtime_error("hom space dimension != 1 (0)");
  res.rows_checked = static_cast<int>(pick.size());
  res.hom_dim = 1;

  res.numerator = SparseMatrix<ZPoly>(T.dim(), dS);
  for (int p = 0; p < P; ++p) {
    if (a[static_cast<std::size_t>(p)].is_zero()) continue;
    const RMat& Pm = res.comps[static_cast<std::size_t>(p)].P;
    for (int r = 0; r < Pm.rows(); ++r)
      for (const auto& [c, v] : Pm.row(r)) res.numerator.add(r, c, a[static_cast<std::size_t>(p)].scaled(v));
  }
  ZPoly g = res.denominator;
  for (int r = 0; r < res.numerator.rows() && g.high() > 0; ++r)
    for (const auto& [c, v] : res.numerator.row(r)) {
      g = gcd(g, v);
      if (g.high() == 0) break;
    }
  res.minimal = g.high() == 0;
  res.poles = monomial_roots(res.denominator, 8 * rd.num_nodes() + 16, &res.residual);
  return res;
}

RMat RMatrixResult::eval(const RatFunc& z) const {
  if (denominator.eval(z).is_zero()) throw std::domain_error("pole: denominator " + denominator.to_string() + " vanishes");
  RMat out(W.dim() * V.dim(), dim());
  for (const auto& cp : comps) {
    if (cp.gamma.is_zero()) continue;
    out += cp.P.scaled(cp.gamma.eval(z));
  }
  return out;
}

SparseMatrix<Fp> RMatrixResult::eval_mod(Fp qs, Fp z) const {
  SparseMatrix<Fp> out(W.dim() * V.dim(), dim());
  for (const auto& cp : comps) {
    if (cp.gamma.is_zero()) continue;
    out += qaff::eval_mod(cp.P, qs).scaled(cp.gamma.eval_mod(qs, z));
  }
  return out;
}

std::vector<std::string> RMatrixResult::source_labels() const {
  std::vector<std::string> out;
  for (int x = 0; x < V.dim(); ++x)
    for (int y = 0; y < W.dim(); ++y) out.push_back(V.label(x) + "⊗" + W.label(y));
  return out;
}

std::vector<std::string> RMatrixResult::target_labels() const {
  std::vector<std::string> out;
  for (int y = 0; y < W.dim(); ++y)
    for (int x = 0; x < V.dim(); ++x) out.push_back(W.label(y) + "⊗" + V.label(x));
  return out;
}

const RMatrixResult& fundamental_R(const AffineType& t, int i, int j) {
  static std::map<std::tuple<AffineType, int, int>, RMatrixResult> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find({t, i, j});
    if (it != cache.end()) return it->second;
  }
  RMatrixResult r = solve_R(fundamental_module(t, i), fundamental_module(t, j));
  std::lock_guard<std::mutex> g(mu);
  return cache.try_emplace({t, i, j}, std::move(r)).first->second;
}

std::vector<std::pair<RatFunc, int>> monomial_roots(ZPoly d, int bound, ZPoly* residual) {
  std::vector<std::pair<RatFunc, int>> out;
  for (int m = -bound; m <= bound && d.high() > d.low(); ++m)
    for (int sign : {1, -1}) {
      RatFunc c = RatFunc::s(m) * RatFunc(sign);
      int mult = 0;
      while (d.high() > d.low() && d.eval(c).is_zero()) {
        d = exact_div(d, linear(c));
        ++mult;
      }
      if (mult) out.emplace_back(c, mult);
    }
  if (residual) *residual = d.is_zero() ? d : d.monic();
  return out;
}

std::string factored_string(const std::vector<std::pair<RatFunc, int>>& roots, const ZPoly& residual) {
  std::string out;
  for (const auto& [c, mult] : roots) {
    if (!out.empty()) out += "*";
    out += "(" + linear(c).to_string() + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  if (!(residual == ZPoly(1))) out += (out.empty() ? "(" : "*(") + residual.to_string() + ")";
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- closed forms

ZPoly closed_form_d(const AffineType& t, int k, int l) {
  const int n = t.n;
  ZPoly d(1);
  if (t.family == Family::A) {
    if (k < 1 || l < 1 || k >= n || l >= n) throw std::invalid_argument("index out of range");
    int top = std::min(std::min(k, l), std::min(n - k, n - l));
    for (int nu = 1; nu <= top; ++nu) d *= linear(RatFunc::neg_q(2 * nu + std::abs(k - l)));
  } else {
    if (k < 1 || l < 1 || k > n || l > n) throw std::invalid_argument("index out of range");
    int top = std::min(std::min(k, l), std::min(n - k, n - l));
    for (int i = 1; i <= top; ++i) d *= linear(RatFunc::neg_s(std::abs(k - l) + 2 * i));
    for (int i = 1; i <= std::min(k, l); ++i) d *= linear(RatFunc::neg_s(2 * n + 2 - k - l + 2 * i));
  }
  return d.monic();
}

SparseMatrix<BiRat> explicit_R11_C(int n) {
  const int N = 2 * n;
  // index of letter a (a > 0) and of its bar
  auto idx = [&](int letter) { return letter > 0 ? letter - 1 : N + letter; };
  auto at = [&](int x, int y) { return x * N + y; };
  const RatFunc s = RatFunc::s(1), one(1), s2 = RatFunc::s(2);
  const ZPoly z = ZPoly::z();
  const ZPoly D1 = linear(s2), D2 = linear(s2) * linear(RatFunc::neg_s(2 * n + 2));
  const BiRat zm1(z - ZPoly(1));
  SparseMatrix<BiRat> R(N * N, N * N);
  auto put = [&](int row, int col, const BiRat& v) { R.add(row, col, v); };
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const int col = at(x, y);
      if (x == y) {
        put(col, col, BiRat(1));
        continue;
      }
      if (x + y != N - 1) {
        // b1 != b2, bar b2; delta(b2 < b1) in the exponent
        put(at(x, y), col, BiRat(ZPoly(one - s2, y < x ? 1 : 0), D1));
        put(at(y, x), col, BiRat((z - ZPoly(1)).scaled(s), D1));
        continue;
      }
      if (x < n) {
        const int a = x + 1;  // b1 = a, b2 = bar a
        put(at(idx(a), idx(-a)), col, BiRat(ZPoly(one - s2), D1));
        for (int k = 1; k <= n; ++k)
          put(at(idx(k), idx(-k)), col, BiRat((z - ZPoly(1)).scaled(RatFunc::neg_s(a + k) * (one - s2)), D2));
        for (int k = a + 1; k <= n; ++k)
          put(at(idx(-k), idx(k)), col, BiRat((z - ZPoly(1)).scaled(-RatFunc::neg_s(2 * n + a - k + 2) * (one - s2)), D2));
        put(at(idx(-a), idx(a)), col, BiRat(((z - ZPoly(1)) * linear(RatFunc::neg_s(2 * n))).scaled(s2), D2));
        for (int k = 1; k < a; ++k)
          put(at(idx(-k), idx(k)), col,
              BiRat(((z - ZPoly(1)) * z).scaled(-RatFunc::neg_s(a - k) * (one - s2)), D2));
      } else {
        const int a = N - x;  // b1 = bar a, b2 = a
        for (int k = 1; k < a; ++k)
          put(at(idx(k), idx(-k)), col, BiRat((z - ZPoly(1)).scaled(-RatFunc::neg_s(2 * n - a + k + 2) * (one - s2)), D2));
        put(at(idx(a), idx(-a)), col, BiRat(((z - ZPoly(1)) * linear(RatFunc::neg_s(2 * n))).scaled(s2), D2));
        for (int k = a + 1; k <= n; ++k)
          put(at(idx(k), idx(-k)), col, BiRat(((z - ZPoly(1)) * z).scaled(-RatFunc::neg_s(k - a) * (one - s2)), D2));
        for (int k = 1; k <= n; ++k)
          put(at(idx(-k), idx(k)), col,
              BiRat(((z - ZPoly(1)) * z).scaled(RatFunc::neg_s(2 * n - a - k + 2) * (one - s2)), D2));
        put(at(idx(-a), idx(a)), col, BiRat(ZPoly(one - s2, 1), D1));
      }
    }
  (void)zm1;
  return R;
}

std::vector<ComponentRatio> component_ratios(const RMatrixResult& R, int k) {
  const RootData& rd = R.V.root_data();
  if (rd.family() != Family::C) throw std::invalid_argument("component ratios are stated for type C");
  const int n = rd.n();
  std::vector<std::pair<Weight, int>> want;  // lambda, exponent of the predicted root
  if (k < n) want.emplace_back(rd.fundamental(k + 1), k + 1);
  want.emplace_back(k == 1 ? rd.zero() : rd.fundamental(k - 1), 2 * n - k + 3);
  std::vector<ComponentRatio> out;
  for (const auto& [lam, e] : want) {
    auto it = R.hw_source.find(lam);
    if (it == R.hw_source.end() || it->second.size() != 1) throw std::runtime_error("hw line not 1-dimensional");
    ComponentRatio cr;
    cr.lambda = lam;
    for (const auto& cp : R.comps)
      if (cp.lambda == lam) cr.gamma = cp.gamma;
    cr.predicted = mobius(RatFunc::neg_s(e));
    cr.unit = cr.gamma / cr.predicted;
    cr.unit_ok = is_unit(cr.unit);
    out.push_back(cr);
  }
  return out;
}

// ---------------------------------------------------------------- universal scalars

PowerSeries a_series(const AffineType& t, int k, int l, int M) {
  const int n = t.n;
  PowerSeries num = PowerSeries::one(M), den = PowerSeries::one(M);
  if (t.family == Family::A) {
    // (-q)^e = (-1)^e q_s^{2e}, base q^{2n}
    auto fac = [&](int e) { return pochhammer_series(2 * e, e % 2 != 0, 4 * n, M); };
    num *= fac(std::abs(k - l));
    num *= fac(2 * n - std::abs(k - l));
    den *= fac(k + l);
    den *= fac(2 * n - k - l);
    PowerSeries r = num / den;
    r.set_prefactor(Rational(2 * (std::min(k, l) * n - k * l), n));
    return r;
  }
  auto ip = [&](int m) { return pochhammer_series(m, m % 2 != 0, 4 * n + 4, M); };
  num *= ip(std::abs(k - l));
  num *= ip(2 * n + 2 - k - l);
  num *= ip(2 * n + 2 + k + l);
  num *= ip(4 * n + 4 - std::abs(k - l));
  den *= ip(k + l);
  den *= ip(2 * n + 2 - k + l);
  den *= ip(2 * n + 2 + k - l);
  den *= ip(4 * n + 4 - k - l);
  PowerSeries r = num / den;
  r.set_prefactor(Rational(std::min(k, l)));
  return r;
}

namespace {

// f(c / z) as z^{-shift} * poly(z), poly(0) != 0
ZPoly reflect_poly(const ZPoly& f, const RatFunc& c, int& shift) {
  ZPoly g = f.subst_inverse().subst_scale(c.inverse());
  shift += -g.low();
  return g.shifted(-g.low());
}

std::string unit_string(const Rational& pre, const RatFunc& c, int zshift) {
  std::ostringstream os;
  os << "q_s^" << rational_string(pre) << " * (" << c.to_string() << ")";
  if (zshift) os << " * z^" << zshift;
  return os.str();
}

FunctionalEntry compare_series(const std::string& name, const PowerSeries& lhs, const ZPoly& num, const ZPoly& den,
                               int zshift) {
  FunctionalEntry fe;
  fe.name = name;
  PowerSeries rhs = PowerSeries::from_rational(num, den, lhs.order());
  if (rhs[0].is_zero() || lhs[0].is_zero()) {
    fe.detail = "vanishing constant term";
    return fe;
  }
  RatFunc c = lhs[0] / rhs[0];
  fe.holds = true;
  for (int j = 0; j <= lhs.order(); ++j)
    if (lhs[j] != c * rhs[j]) {
      fe.holds = false;
      fe.detail = "first mismatch at z^" + std::to_string(j);
      break;
    }
  fe.unit = unit_string(lhs.prefactor(), c, zshift);
  return fe;
}

}  // namespace

std::vector<FunctionalEntry> functional_checks(const AffineType& t, int k, int l, int M, bool use_solved) {
  RootData rd(t);
  auto d = [&](int i, int j) { return use_solved ? fundamental_R(t, i, j).denominator : closed_form_d(t, i, j); };
  const RatFunc ps = rd.constants().pstar();
  const int ks = rd.dual_index(k);
  std::vector<FunctionalEntry> out;
  {
    FunctionalEntry fe;
    fe.name = "reverse";
    ZPoly lhs = d(l, k), rhs = d(k, l).subst_inverse().bar();
    BiRat u = BiRat(lhs) / BiRat(rhs);
    fe.holds = is_unit(u);
    fe.unit = u.to_string();
    out.push_back(fe);
  }
  {
    PowerSeries lhs = a_series(t, k, l, M) * a_series(t, ks, l, M).subst_scale(ps.inverse());
    int shift = 0;
    ZPoly den = reflect_poly(d(l, ks), ps, shift);
    out.push_back(compare_series("eq_univ", lhs, d(k, l), den, -shift));
  }
  {
    PowerSeries lhs = a_series(t, k, l, M) / a_series(t, k, l, M).subst_scale((ps * ps).inverse());
    int shift = 0;
    ZPoly num = d(k, l) * reflect_poly(d(l, k), ps * ps, shift);
    int shift2 = 0;
    ZPoly den = reflect_poly(d(l, ks), ps, shift2) * d(ks, l).subst_scale(ps.inverse());
    out.push_back(compare_series("eq_diff", lhs, num, den, shift2 - shift));
  }
  return out;
}

// ---------------------------------------------------------------- consistency

namespace {

Mat<BiRat> gamma_block(const RMatrixResult& R, const Weight& lam, bool invert_z) {
  const std::size_t m = R.hw_source.at(lam).size();
  Mat<BiRat> G(m, Vec<BiRat>(m));
  for (const auto& cp : R.comps)
    if (cp.lambda == lam)
      G[static_cast<std::size_t>(cp.a)][static_cast<std::size_t>(cp.b)] = invert_z ? cp.gamma.subst_inverse() : cp.gamma;
  return G;
}

// C[b][c] with from[b] = sum_c C[b][c] to[c]
Mat<BiRat> change_of_basis(const std::vector<RVec>& from, const std::vector<RVec>& to) {
  const std::size_t m = to.size(), dim = to[0].size();
  Mat<RatFunc> A(dim, RVec(m)), B(dim, RVec(from.size()));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < m; ++c) A[r][c] = to[c][r];
    for (std::size_t c = 0; c < from.size(); ++c) B[r][c] = from[c][r];
  }
  auto x = solve(A, B, m);
  if (!x) throw std::logic_error("hw vectors do not match");
  Mat<BiRat> C(from.size(), Vec<BiRat>(m));
  for (std::size_t b = 0; b < from.size(); ++b)
    for (std::size_t c = 0; c < m; ++c) C[b][c] = BiRat((*x)[c][b]);
  return C;
}

}  // namespace

InversionReport inversion(const RMatrixResult& vw, const RMatrixResult& wv) {
  InversionReport rep;
  rep.identity = true;
  for (const auto& [lam, hs] : vw.hw_source) {
    Mat<BiRat> G = gamma_block(vw, lam, false), Gp = gamma_block(wv, lam, true);
    Mat<BiRat> C1 = change_of_basis(vw.hw_target.at(lam), wv.hw_source.at(lam));
    Mat<BiRat> C2 = change_of_basis(wv.hw_target.at(lam), hs);
    Mat<BiRat> X = matmul(matmul(matmul(G, C1), Gp), C2);
    for (std::size_t a = 0; a < X.size(); ++a)
      for (std::size_t e = 0; e < X.size(); ++e)
        if (X[a][e] != BiRat(a == e ? 1 : 0)) rep.identity = false;
  }
  rep.spot = true;
  for (int t = 0; t < 2; ++t) {
    SparseMatrix<Fp> a = vw.eval_mod(kQs[t], kZ[t]), b = wv.eval_mod(kQs[t], kZ[t].inverse());
    if (!(b * a == SparseMatrix<Fp>::identity(vw.dim()))) rep.spot = false;
  }
  return rep;
}

namespace {

using ZMat = SparseMatrix<ZPoly>;

ZMat to_z(const RMat& m) {
  return m.map([](const RatFunc& v) { return ZPoly(v); });
}

int z_span(const ZMat& m, const ZPoly* extra) {
  int lo = 0, hi = 0;
  bool first = true;
  auto see = [&](const ZPoly& p) {
    if (p.is_zero()) return;
    if (first || p.low() < lo) lo = p.low();
    if (first || p.high() > hi) hi = p.high();
    first = false;
  };
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) see(v);
  if (extra) see(*extra);
  return first ? 0 : hi - lo;
}

template <class T>
bool braid_equal(const SparseMatrix<T>& ab, const SparseMatrix<T>& ac, const SparseMatrix<T>& bc, int dA, int dB,
                 int dC) {
  using M = SparseMatrix<T>;
  M IA = M::identity(dA), IB = M::identity(dB), IC = M::identity(dC);
  M lhs = kron(bc, IA) * (kron(IB, ac) * kron(ab, IC));
  M rhs = kron(IC, ab) * (kron(ac, IB) * kron(IA, bc));
  return lhs == rhs;
}

void check_triple(const RMatrixResult& ab, const RMatrixResult& ac, const RMatrixResult& bc) {
  if (ab.V.dim() != ac.V.dim() || ab.W.dim() != bc.V.dim() || ac.W.dim() != bc.W.dim())
    throw std::invalid_argument("R-matrices do not form a triple");
}

}  // namespace

YBReport yang_baxter(const RMatrixResult& ab, const RMatrixResult& ac, const RMatrixResult& bc) {
  check_triple(ab, ac, bc);
  YBReport rep;
  rep.degree_bound = z_span(ac.numerator, &ac.denominator) + z_span(bc.numerator, &bc.denominator);
  rep.holds = true;
  for (long y = 2; rep.points <= rep.degree_bound; ++y) {
    RatFunc yv(y);
    if (bc.denominator.eval(yv).is_zero()) continue;
    ZMat nac = ac.numerator.map([&](const ZPoly& p) { return p.subst_scale(yv); });
    ZMat rbc = to_z(bc.eval(yv));
    if (!braid_equal(ab.numerator, nac, rbc, ab.V.dim(), ab.W.dim(), ac.W.dim())) {
      rep.holds = false;
      rep.error = "mismatch at y = " + std::to_string(y);
      break;
    }
    ++rep.points;
  }
  return rep;
}

YBReport yang_baxter_at(const RMatrixResult& ab, const RMatrixResult& ac, const RMatrixResult& bc, const RatFunc& x,
                        const RatFunc& y) {
  check_triple(ab, ac, bc);
  YBReport rep;
  try {
    rep.holds = braid_equal(ab.eval(x), ac.eval(x * y), bc.eval(y), ab.V.dim(), ab.W.dim(), ac.W.dim());
    rep.points = 1;
  } catch (const std::domain_error& e) {
    rep.error = e.what();
  }
  return rep;
}

PoleVerdict pole_reducibility(const AffineType& t, int i, int j, const RatFunc& a) {
  const RMatrixResult& R = fundamental_R(t, i, j);
  PoleVerdict v;
  v.pole = R.denominator.eval(a).is_zero();
  UModule M = tensor(fundamental_module(t, i), twist(fundamental_module(t, j), a));
  v.cyclic = is_cyclic(M, basis_vector(M.dim(), 0));
  v.cocyclic = is_cocyclic(M, 0);
  v.reducible = !(v.cyclic && v.cocyclic);
  return v;
}

}  // namespace qaff
