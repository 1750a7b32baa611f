#include "qaff/umodule.hpp"

#include "qaff/crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qaff {

// ---------------------------------------------------------------- ZMatrix

void ZMatrix::add_part(int d, const RMat& m) {
  if (m.rows() != rows_ || m.cols() != cols_) throw std::invalid_argument("dimension mismatch");
  if (m.is_zero()) return;
  auto it = p_.find(d);
  if (it == p_.end()) {
    p_.emplace(d, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) p_.erase(it);
}

RMat ZMatrix::part(int d) const {
  auto it = p_.find(d);
  return it == p_.end() ? RMat(rows_, cols_) : it->second;
}

ZMatrix ZMatrix::shifted(int d) const {
  ZMatrix r(rows_, cols_);
  for (const auto& [k, m] : p_) r.p_.emplace(k + d, m);
  return r;
}

ZMatrix ZMatrix::scaled(const RatFunc& c) const {
  ZMatrix r(rows_, cols_);
  if (c.is_zero()) return r;
  for (const auto& [k, m] : p_) r.p_.emplace(k, m.scaled(c));
  return r;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix r(cols_, rows_);
  for (const auto& [k, m] : p_) r.p_.emplace(k, m.transpose());
  return r;
}

RMat ZMatrix::eval(const RatFunc& z) const {
  RMat r(rows_, cols_);
  for (const auto& [k, m] : p_) r += k == 0 ? m : m.scaled(z.pow(k));
  return r;
}

SparseMatrix<Fp> ZMatrix::eval_mod(Fp qs, Fp z) const {
  SparseMatrix<Fp> r(rows_, cols_);
  for (const auto& [k, m] : p_) {
    Fp zk = z.pow_signed(k);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : m.row(i)) r.add(i, j, zk * qaff::eval_mod(v, qs));
  }
  return r;
}

ZPoly ZMatrix::entry(int i, int j) const {
  ZPoly p;
  for (const auto& [k, m] : p_) {
    RatFunc v = m.get(i, j);
    if (!v.is_zero()) p += ZPoly(v, k);
  }
  return p;
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
  ZMatrix r(a.rows_, b.cols_);
  for (const auto& [d1, m1] : a.p_)
    for (const auto& [d2, m2] : b.p_) r.add_part(d1 + d2, m1 * m2);
  return r;
}

ZMatrix operator+(const ZMatrix& a, const ZMatrix& b) {
  ZMatrix r = a;
  for (const auto& [d, m] : b.p_) r.add_part(d, m);
  return r;
}

ZMatrix operator-(const ZMatrix& a, const ZMatrix& b) {
  ZMatrix r = a;
  for (const auto& [d, m] : b.p_) r.add_part(d, -m);
  return r;
}

ZMatrix kron(const ZMatrix& a, const ZMatrix& b) {
  ZMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [d1, m1] : a.parts())
    for (const auto& [d2, m2] : b.parts()) r.add_part(d1 + d2, kron(m1, m2));
  return r;
}

SparseMatrix<Fp> eval_mod(const RMat& m, Fp qs) {
  return m.map([qs](const RatFunc& v) { return eval_mod(v, qs); });
}

// ---------------------------------------------------------------- UModule

UModule::UModule(RootData rd, std::vector<std::string> labels, std::vector<Weight> wts, std::string name)
    : rd_(rd), name_(std::move(name)), labels_(std::move(labels)), wts_(std::move(wts)) {
  if (labels_.size() != wts_.size()) throw std::invalid_argument("labels and weights differ in length");
  int d = dim();
  e_.assign(static_cast<std::size_t>(rd.num_nodes()), ZMatrix(d, d));
  f_.assign(static_cast<std::size_t>(rd.num_nodes()), ZMatrix(d, d));
  for (int b = 0; b < d; ++b) spaces_[wts_[static_cast<std::size_t>(b)]].push_back(b);
}

int UModule::find(const std::string& label) const {
  for (int b = 0; b < dim(); ++b)
    if (labels_[static_cast<std::size_t>(b)] == label) return b;
  return -1;
}

void UModule::set_E(int i, ZMatrix m) {
  if (m.rows() != dim() || m.cols() != dim()) throw std::invalid_argument("dimension mismatch");
  e_[static_cast<std::size_t>(i)] = std::move(m);
}

void UModule::set_F(int i, ZMatrix m) {
  if (m.rows() != dim() || m.cols() != dim()) throw std::invalid_argument("dimension mismatch");
  f_[static_cast<std::size_t>(i)] = std::move(m);
}

std::vector<RatFunc> UModule::t_diag(int i, int k) const {
  std::vector<RatFunc> d;
  d.reserve(wts_.size());
  for (const auto& w : wts_) d.push_back(RatFunc::s(k * rd_->t_exp(i, w)));
  return d;
}

bool UModule::formal() const {
  for (const auto& m : e_)
    if (!m.is_constant()) return true;
  for (const auto& m : f_)
    if (!m.is_constant()) return true;
  return false;
}

std::vector<int> UModule::weight_space(const Weight& w) const {
  auto it = spaces_.find(w);
  return it == spaces_.end() ? std::vector<int>{} : it->second;
}

UModule trivial_module(const RootData& rd) { return UModule(rd, {"1"}, {rd.zero()}, "k"); }

UModule module_from_crystal(const CrystalGraph& b, const std::string& name) {
  std::vector<std::string> labels;
  std::vector<Weight> wts;
  for (int x = 0; x < b.size(); ++x) {
    labels.push_back(b.label(x));
    wts.push_back(b.wt(x));
  }
  UModule m(b.root_data(), labels, wts, name);
  for (int i = 0; i < b.root_data().num_nodes(); ++i) {
    RMat e(b.size(), b.size()), f(b.size(), b.size());
    for (int x = 0; x < b.size(); ++x) {
      if (b.e(i, x) >= 0) e.set(b.e(i, x), x, RatFunc(1));
      if (b.f(i, x) >= 0) f.set(b.f(i, x), x, RatFunc(1));
    }
    m.set_E(i, ZMatrix(e));
    m.set_F(i, ZMatrix(f));
  }
  return m;
}

UModule twist(const UModule& m, const RatFunc& a) {
  if (a.is_zero()) throw std::invalid_argument("zero twist parameter");
  UModule r = m;
  r.set_E(0, m.E(0).scaled(a));
  r.set_F(0, m.F(0).scaled(a.inverse()));
  if (!a.is_one()) r.set_name(m.name() + "_{" + a.to_string() + "}");
  return r;
}

UModule twist_formal(const UModule& m, int d) {
  UModule r = m;
  r.set_E(0, m.E(0).shifted(d));
  r.set_F(0, m.F(0).shifted(-d));
  r.set_name(m.name() + "_{z" + (d == 1 ? std::string() : "^" + std::to_string(d)) + "}");
  return r;
}

UModule specialize(const UModule& m, const RatFunc& z) {
  UModule r = m;
  for (int i = 0; i < m.root_data().num_nodes(); ++i) {
    r.set_E(i, ZMatrix(m.E(i).eval(z)));
    r.set_F(i, ZMatrix(m.F(i).eval(z)));
  }
  return r;
}

UModule tensor(const UModule& a, const UModule& b) {
  if (a.root_data().type() != b.root_data().type()) throw std::invalid_argument("type mismatch");
  std::vector<std::string> labels;
  std::vector<Weight> wts;
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < b.dim(); ++y) {
      labels.push_back(a.label(x) + "⊗" + b.label(y));
      wts.push_back(a.wt(x) + b.wt(y));
    }
  UModule r(a.root_data(), labels, wts, a.name() + "⊗" + b.name());
  ZMatrix ia(RMat::identity(a.dim())), ib(RMat::identity(b.dim()));
  for (int i = 0; i < a.root_data().num_nodes(); ++i) {
    r.set_E(i, kron(a.E(i), ZMatrix(b.T(i, -1))) + kron(ia, b.E(i)));
    r.set_F(i, kron(a.F(i), ib) + kron(ZMatrix(a.T(i)), b.F(i)));
  }
  return r;
}

namespace {

Weight support_weight(const UModule& m, const RVec& v) {
  for (int b = 0; b < m.dim(); ++b)
    if (!v[static_cast<std::size_t>(b)].is_zero()) return m.wt(b);
  throw std::invalid_argument("zero vector");
}

}  // namespace

UModule restrict_to(const UModule& m, const std::vector<RVec>& basis, const std::vector<std::string>& labels,
                    const std::string& name) {
  if (m.formal()) throw std::invalid_argument("restrict_to needs a specialized module");
  std::vector<Weight> wts;
  for (const auto& v : basis) wts.push_back(support_weight(m, v));
  UModule r(m.root_data(), labels, wts, name);
  // per weight: sub-basis indices and the block of their coordinates
  std::map<Weight, std::vector<int>> sub;
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) sub[wts[static_cast<std::size_t>(k)]].push_back(k);
  auto block_of = [&](const Weight& w) {
    std::vector<int> rows = m.weight_space(w);
    Mat<RatFunc> a(rows.size(), RVec(sub[w].size()));
    for (std::size_t c = 0; c < sub[w].size(); ++c)
      for (std::size_t i = 0; i < rows.size(); ++i)
        a[i][c] = basis[static_cast<std::size_t>(sub[w][c])][static_cast<std::size_t>(rows[i])];
    return std::make_pair(rows, a);
  };
  for (int g = 0; g < 2 * m.root_data().num_nodes(); ++g) {
    int i = g % m.root_data().num_nodes();
    const RMat G = (g < m.root_data().num_nodes() ? m.E(i) : m.F(i)).part(0);
    Weight shift = g < m.root_data().num_nodes() ? m.root_data().alpha(i) : m.root_data().zero() - m.root_data().alpha(i);
    RMat out(r.dim(), r.dim());
    for (const auto& [w, ks] : sub) {
      Weight tw = w + shift;
      if (!sub.count(tw)) {
        for (int k : ks)
          if (!is_zero_vec(G.apply(basis[static_cast<std::size_t>(k)])))
            throw std::invalid_argument("span is not stable under generators (g=" + std::to_string(g) + " at " + w.to_string() + ")");
        continue;
      }
      auto [rows, a] = block_of(tw);
      Mat<RatFunc> rhs(rows.size(), RVec(ks.size()));
      for (std::size_t c = 0; c < ks.size(); ++c) {
        RVec img = G.apply(basis[static_cast<std::size_t>(ks[c])]);
        for (std::size_t i2 = 0; i2 < rows.size(); ++i2) rhs[i2][c] = img[static_cast<std::size_t>(rows[i2])];
      }
      auto x = solve(a, rhs, sub[tw].size());
      if (!x) throw std::invalid_argument("span is not stable under generators (g=" + std::to_string(g) + " at " + w.to_string() + ")");
      for (std::size_t rr = 0; rr < sub[tw].size(); ++rr)
        for (std::size_t c = 0; c < ks.size(); ++c) out.add(sub[tw][rr], ks[c], (*x)[rr][c]);
    }
    if (g < m.root_data().num_nodes())
      r.set_E(i, ZMatrix(out));
    else
      r.set_F(i, ZMatrix(out));
  }
  return r;
}

// ---------------------------------------------------------------- relations

namespace {

ZMatrix divided_power(const ZMatrix& x, int k, int e, int dim) {
  ZMatrix p(RMat::identity(dim));
  for (int j = 0; j < k; ++j) p = p * x;
  return p.scaled(RatFunc::qfact(k, e).inverse());
}

}  // namespace

RelationReport check_relations(const UModule& m) {
  RelationReport rep;
  const RootData& rd = m.root_data();
  const int N = rd.num_nodes(), d = m.dim();
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
  for (int i = 0; i < N; ++i) {
    RMat t = m.T(i), tinv = m.T(i, -1);
    ++rep.checked;
    if (!(t * tinv == RMat::identity(d))) fail("t_" + std::to_string(i) + " not invertible");
    for (int j = 0; j < N; ++j) {
      RatFunc qa = RatFunc::s(rd.qi_exp(i) * rd.cartan(i, j));
      rep.checked += 2;
      if (!(ZMatrix(t) * m.E(j) * ZMatrix(tinv) == m.E(j).scaled(qa)))
        fail("t_" + std::to_string(i) + " e_" + std::to_string(j) + " t_" + std::to_string(i) + "^-1");
      if (!(ZMatrix(t) * m.F(j) * ZMatrix(tinv) == m.F(j).scaled(qa.inverse())))
        fail("t_" + std::to_string(i) + " f_" + std::to_string(j) + " t_" + std::to_string(i) + "^-1");
      ++rep.checked;
      ZMatrix comm = m.E(i) * m.F(j) - m.F(j) * m.E(i);
      ZMatrix rhs(d, d);
      if (i == j) {
        RatFunc qi = RatFunc::s(rd.qi_exp(i));
        rhs = ZMatrix((t - tinv).scaled((qi - qi.inverse()).inverse()));
      }
      if (!(comm == rhs)) fail("[e_" + std::to_string(i) + ", f_" + std::to_string(j) + "]");
      if (i == j) continue;
      int b = 1 - rd.cartan(i, j);
      for (int side = 0; side < 2; ++side) {
        const ZMatrix& X = side == 0 ? m.E(i) : m.F(i);
        const ZMatrix& Y = side == 0 ? m.E(j) : m.F(j);
        ZMatrix sum(d, d);
        for (int k = 0; k <= b; ++k) {
          ZMatrix term = divided_power(X, k, rd.qi_exp(i), d) * Y * divided_power(X, b - k, rd.qi_exp(i), d);
          sum = k % 2 ? sum - term : sum + term;
        }
        ++rep.checked;
        if (!sum.is_zero())
          fail(std::string("Serre ") + (side == 0 ? "e" : "f") + " (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- closures

namespace {

template <class T>
Action<T> make_action(const UModule& m, const std::vector<SparseMatrix<T>>& gens, bool transposed) {
  Action<T> a;
  a.dim = m.dim();
  a.space_of.assign(static_cast<std::size_t>(m.dim()), -1);
  a.pos.assign(static_cast<std::size_t>(m.dim()), -1);
  for (const auto& [w, idx] : m.weight_spaces()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      a.space_of[static_cast<std::size_t>(idx[k])] = static_cast<int>(a.spaces.size());
      a.pos[static_cast<std::size_t>(idx[k])] = static_cast<int>(k);
    }
    a.spaces.push_back(idx);
  }
  for (const auto& g : gens) a.cols.push_back(transposed ? g : g.transpose());
  return a;
}

}  // namespace

Action<RatFunc> action_exact(const UModule& m, bool transposed) {
  if (m.formal()) throw std::invalid_argument("closure needs a specialized module");
  std::vector<RMat> gens;
  for (int i = 0; i < m.root_data().num_nodes(); ++i) gens.push_back(m.E(i).part(0));
  for (int i = 0; i < m.root_data().num_nodes(); ++i) gens.push_back(m.F(i).part(0));
  return make_action(m, gens, transposed);
}

Action<Fp> action_mod(const UModule& m, Fp qs, Fp z, bool transposed) {
  std::vector<SparseMatrix<Fp>> gens;
  for (int i = 0; i < m.root_data().num_nodes(); ++i) gens.push_back(m.E(i).eval_mod(qs, z));
  for (int i = 0; i < m.root_data().num_nodes(); ++i) gens.push_back(m.F(i).eval_mod(qs, z));
  return make_action(m, gens, transposed);
}

namespace {

template <class T>
std::map<int, Vec<T>> split(const Action<T>& a, const Vec<T>& v) {
  std::map<int, Vec<T>> parts;
  for (int b = 0; b < a.dim; ++b) {
    const T& x = v[static_cast<std::size_t>(b)];
    if (x.is_zero()) continue;
    int w = a.space_of[static_cast<std::size_t>(b)];
    auto it = parts.find(w);
    if (it == parts.end()) it = parts.emplace(w, Vec<T>(a.spaces[static_cast<std::size_t>(w)].size())).first;
    it->second[static_cast<std::size_t>(a.pos[static_cast<std::size_t>(b)])] = x;
  }
  return parts;
}

template <class T>
std::map<int, Vec<T>> apply_local(const Action<T>& a, int g, int w, const Vec<T>& v) {
  std::map<int, Vec<T>> out;
  const auto& idx = a.spaces[static_cast<std::size_t>(w)];
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& [b, val] : a.cols[static_cast<std::size_t>(g)].row(idx[k])) {
      int tw = a.space_of[static_cast<std::size_t>(b)];
      auto it = out.find(tw);
      if (it == out.end()) it = out.emplace(tw, Vec<T>(a.spaces[static_cast<std::size_t>(tw)].size())).first;
      it->second[static_cast<std::size_t>(a.pos[static_cast<std::size_t>(b)])] += val * v[k];
    }
  }
  return out;
}

template <class T>
std::vector<Echelon<T>> run_closure(const Action<T>& a, const std::vector<Vec<T>>& start, bool stop_when_full) {
  std::vector<Echelon<T>> ech;
  for (const auto& s : a.spaces) ech.emplace_back(s.size());
  std::deque<std::pair<int, Vec<T>>> queue;
  std::size_t total = 0;
  auto offer = [&](int w, Vec<T> v) {
    if (ech[static_cast<std::size_t>(w)].add(v)) {
      ++total;
      queue.emplace_back(w, std::move(v));
    }
  };
  for (const auto& v : start)
    for (auto& [w, p] : split(a, v)) offer(w, std::move(p));
  const int ng = static_cast<int>(a.cols.size());
  while (!queue.empty()) {
    if (stop_when_full && total == static_cast<std::size_t>(a.dim)) break;
    auto [w, v] = std::move(queue.front());
    queue.pop_front();
    for (int g = 0; g < ng; ++g)
      for (auto& [tw, img] : apply_local(a, g, w, v))
        if (!is_zero_vec(img)) offer(tw, std::move(img));
  }
  return ech;
}

const Fp kProbeQs[] = {Fp(1000003), Fp(2718281829), Fp(3141592653), Fp(1618033988)};

template <class F>
auto with_probe(F&& f) {
  for (Fp qs : kProbeQs) {
    try {
      return f(qs);
    } catch (const std::domain_error&) {
    }
  }
  throw std::runtime_error("no usable probe point");
}

Vec<Fp> vec_mod(const RVec& v, Fp qs) {
  Vec<Fp> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = eval_mod(v[i], qs);
  return r;
}

}  // namespace

template <class T>
std::vector<Echelon<T>> closure(const Action<T>& a, const std::vector<Vec<T>>& start) {
  return run_closure(a, start, false);
}

template <class T>
int closure_dim(const Action<T>& a, const std::vector<Vec<T>>& start) {
  int d = 0;
  for (const auto& e : run_closure(a, start, true)) d += static_cast<int>(e.dim());
  return d;
}

template std::vector<Echelon<RatFunc>> closure(const Action<RatFunc>&, const std::vector<RVec>&);
template std::vector<Echelon<Fp>> closure(const Action<Fp>&, const std::vector<Vec<Fp>>&);
template int closure_dim(const Action<RatFunc>&, const std::vector<RVec>&);
template int closure_dim(const Action<Fp>&, const std::vector<Vec<Fp>>&);

RVec basis_vector(int dim, int b) {
  RVec v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(b)] = RatFunc(1);
  return v;
}

namespace {

// Full rank at a probe point is a certificate; otherwise recompute exactly.
int closure_dim_certified(const UModule& m, const RVec& v, bool transposed) {
  int d = with_probe([&](Fp qs) { return closure_dim(action_mod(m, qs, Fp(1), transposed), {vec_mod(v, qs)}); });
  if (d == m.dim()) return d;
  return closure_dim(action_exact(m, transposed), {v});
}

}  // namespace

int generated_dim(const UModule& m, const RVec& v) { return closure_dim_certified(m, v, false); }

std::vector<RVec> generated_submodule(const UModule& m, const RVec& v) {
  auto a = action_exact(m);
  auto ech = closure(a, {v});
  std::vector<RVec> out;
  for (std::size_t w = 0; w < ech.size(); ++w)
    for (const auto& row : ech[w].rows()) {
      RVec full(static_cast<std::size_t>(m.dim()));
      for (std::size_t k = 0; k < row.size(); ++k) full[static_cast<std::size_t>(a.spaces[w][k])] = row[k];
      out.push_back(std::move(full));
    }
  return out;
}

bool is_cyclic(const UModule& m, const RVec& v) { return generated_dim(m, v) == m.dim(); }

bool is_cocyclic(const UModule& m, int b) {
  if (m.weight_space(m.wt(b)).size() != 1) throw std::invalid_argument("weight space of the test vector is not a line");
  return closure_dim_certified(m, basis_vector(m.dim(), b), true) == m.dim();
}

// ---------------------------------------------------------------- highest weight vectors

std::vector<RVec> classical_hw_vectors(const UModule& m, const Weight& lambda) {
  const RootData& rd = m.root_data();
  std::vector<int> src = m.weight_space(lambda);
  if (src.empty()) return {};
  Mat<RatFunc> rows;
  for (int i = 1; i < rd.num_nodes(); ++i) {
    std::vector<int> tgt = m.weight_space(lambda + rd.alpha(i));
    if (tgt.empty()) continue;
    auto blk = m.E(i).part(0).block(tgt, src);
    for (auto& r : blk) rows.push_back(std::move(r));
  }
  std::vector<RVec> out;
  std::vector<RVec> ns;
  if (rows.empty()) {
    for (std::size_t k = 0; k < src.size(); ++k) {
      RVec e(src.size());
      e[k] = RatFunc(1);
      ns.push_back(e);
    }
  } else {
    ns = nullspace(rows, src.size());
  }
  for (const auto& x : ns) {
    RVec full(static_cast<std::size_t>(m.dim()));
    for (std::size_t k = 0; k < src.size(); ++k) full[static_cast<std::size_t>(src[k])] = x[k];
    out.push_back(std::move(full));
  }
  return out;
}

std::map<Weight, std::vector<RVec>> dominant_extremal_vectors(const UModule& m) {
  if (m.formal()) throw std::invalid_argument("needs a specialized module");
  const RootData& rd = m.root_data();
  const int N = rd.num_nodes();
  std::map<Weight, std::vector<RVec>> out;
  for (const auto& [lam, lam_idx] : m.weight_spaces()) {
    if (!rd.is_dominant(lam)) continue;
    // basis of K_mu as columns in local coordinates
    std::map<Weight, Mat<RatFunc>> K;
    for (const auto& [mu, idx] : m.weight_spaces()) {
      if (!in_hull(rd, lam, mu)) continue;
      Mat<RatFunc> id(idx.size(), RVec(idx.size()));
      for (std::size_t k = 0; k < idx.size(); ++k) id[k][k] = RatFunc(1);
      K[mu] = id;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& [mu, B] : K) {
        if (B.empty() || B[0].empty()) continue;
        std::size_t kdim = B[0].size();
        std::vector<int> src = m.weight_space(mu);
        Mat<RatFunc> cons;
        for (int g = 0; g < 2 * N; ++g) {
          int i = g % N;
          Weight tw = g < N ? mu + rd.alpha(i) : mu - rd.alpha(i);
          std::vector<int> tgt = m.weight_space(tw);
          if (tgt.empty()) continue;
          RMat G = (g < N ? m.E(i) : m.F(i)).part(0);
          Mat<RatFunc> GB = matmul(G.block(tgt, src), B);
          // annihilator of K_tw inside M_tw
          Mat<RatFunc> ann;
          auto it = K.find(tw);
          if (it == K.end() || it->second.empty() || it->second[0].empty()) {
            ann.assign(tgt.size(), RVec(tgt.size()));
            for (std::size_t k = 0; k < tgt.size(); ++k) ann[k][k] = RatFunc(1);
          } else {
            ann = nullspace(transpose(it->second, it->second[0].size()), tgt.size());
          }
          if (ann.empty()) continue;
          for (auto& r : matmul(ann, GB)) cons.push_back(std::move(r));
        }
        if (cons.empty()) continue;
        auto ns = nullspace(cons, kdim);
        if (ns.size() == kdim) continue;
        changed = true;
        if (ns.empty()) {
          B.assign(src.size(), RVec());
          continue;
        }
        B = matmul(B, transpose(ns, kdim));
      }
    }
    const Mat<RatFunc>& B = K[lam];
    if (B.empty() || B[0].empty()) continue;
    std::vector<RVec> vs;
    for (std::size_t c = 0; c < B[0].size(); ++c) {
      RVec full(static_cast<std::size_t>(m.dim()));
      for (std::size_t k = 0; k < lam_idx.size(); ++k) full[static_cast<std::size_t>(lam_idx[k])] = B[k][c];
      vs.push_back(std::move(full));
    }
    out[lam] = std::move(vs);
  }
  return out;
}

// ---------------------------------------------------------------- intertwiners

namespace {

struct HomSystem {
  std::map<std::pair<int, int>, int> var;  // (t, s) -> column
  std::vector<std::pair<int, int>> vars;
  std::vector<SparseRow<RatFunc>> rows;
};

HomSystem hom_equations(const UModule& S, const UModule& T) {
  if (S.formal() || T.formal()) throw std::invalid_argument("hom_space needs specialized modules");
  if (S.root_data().type() != T.root_data().type()) throw std::invalid_argument("type mismatch");
  const RootData& rd = S.root_data();
  HomSystem h;
  for (const auto& [w, sidx] : S.weight_spaces()) {
    std::vector<int> tidx = T.weight_space(w);
    for (int t : tidx)
      for (int s : sidx) {
        h.var[{t, s}] = static_cast<int>(h.vars.size());
        h.vars.emplace_back(t, s);
      }
  }
  const int N = rd.num_nodes();
  for (int g = 0; g < 2 * N; ++g) {
    int i = g % N;
    RMat gS = (g < N ? S.E(i) : S.F(i)).part(0), gT = (g < N ? T.E(i) : T.F(i)).part(0);
    RMat gSt = gS.transpose();
    for (const auto& [mu, sidx] : S.weight_spaces()) {
      Weight nu = g < N ? mu + rd.alpha(i) : mu - rd.alpha(i);
      std::vector<int> tidx = T.weight_space(nu);
      for (int t : tidx)
        for (int s : sidx) {
          std::map<int, RatFunc> acc;
          for (const auto& [k, v] : gSt.row(s)) {
            auto it = h.var.find({t, k});
            if (it != h.var.end()) acc[it->second] += v;
          }
          for (const auto& [k, v] : gT.row(t)) {
            auto it = h.var.find({k, s});
            if (it != h.var.end()) acc[it->second] -= v;
          }
          SparseRow<RatFunc> row;
          for (auto& [c, v] : acc)
            if (!v.is_zero()) row.emplace_back(c, std::move(v));
          if (!row.empty()) h.rows.push_back(std::move(row));
        }
    }
  }
  return h;
}

SparseRow<Fp> row_mod(const SparseRow<RatFunc>& r, Fp qs) {
  SparseRow<Fp> out;
  for (const auto& [c, v] : r) {
    Fp x = eval_mod(v, qs);
    if (!x.is_zero()) out.emplace_back(c, x);
  }
  return out;
}

}  // namespace

bool is_intertwiner(const RMat& x, const UModule& s, const UModule& t) {
  for (int i = 0; i < s.root_data().num_nodes(); ++i) {
    if (!(x * s.E(i).part(0) == t.E(i).part(0) * x)) return false;
    if (!(x * s.F(i).part(0) == t.F(i).part(0) * x)) return false;
  }
  for (int a = 0; a < x.rows(); ++a)
    for (const auto& [b, v] : x.row(a))
      if (t.wt(a) != s.wt(b)) return false;
  return true;
}

int hom_dim_bound(const UModule& s, const UModule& t) {
  HomSystem h = hom_equations(s, t);
  return with_probe([&](Fp qs) {
    SparseSystem<Fp> sys(static_cast<int>(h.vars.size()));
    for (const auto& r : h.rows) sys.add(row_mod(r, qs));
    return static_cast<int>(h.vars.size()) - sys.rank();
  });
}

std::vector<RMat> hom_space(const UModule& s, const UModule& t) {
  HomSystem h = hom_equations(s, t);
  const int nv = static_cast<int>(h.vars.size());
  std::vector<std::size_t> chosen = with_probe([&](Fp qs) {
    SparseSystem<Fp> sys(nv);
    std::vector<std::size_t> pick;
    for (std::size_t k = 0; k < h.rows.size(); ++k)
      if (sys.add(row_mod(h.rows[k], qs))) pick.push_back(k);
    return pick;
  });
  auto build = [&](const std::vector<std::size_t>& rows) {
    SparseSystem<RatFunc> sys(nv);
    for (std::size_t k : rows) sys.add(h.rows[k]);
    std::vector<RMat> out;
    for (const auto& x : sys.nullspace()) {
      RMat m(t.dim(), s.dim());
      for (int c = 0; c < nv; ++c)
        if (!x[static_cast<std::size_t>(c)].is_zero())
          m.set(h.vars[static_cast<std::size_t>(c)].first, h.vars[static_cast<std::size_t>(c)].second, x[static_cast<std::size_t>(c)]);
      out.push_back(std::move(m));
    }
    return out;
  };
  auto out = build(chosen);
  bool ok = true;
  for (const auto& m : out) ok = ok && is_intertwiner(m, s, t);
  if (ok) return out;
  std::vector<std::size_t> all(h.rows.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return build(all);
}

namespace {

RMat normalize_first(RMat m) {
  for (int a = 0; a < m.rows(); ++a)
    if (!m.row(a).empty()) return m.scaled(m.row(a).front().second.inverse());
  return m;
}

}  // namespace

DualityResult duality_solve(const std::vector<UModule>& modules, int i, int max_exp) {
  const UModule& Vi = modules.at(static_cast<std::size_t>(i));
  const RootData& rd = Vi.root_data();
  UModule k = trivial_module(rd);
  DualityResult res;
  std::vector<RatFunc> cands;
  for (int m = -max_exp; m <= max_exp; ++m) {
    cands.push_back(RatFunc::s(m));
    cands.push_back(-RatFunc::s(m));
  }
  for (int j = 1; j < static_cast<int>(modules.size()); ++j) {
    const UModule& Vj = modules[static_cast<std::size_t>(j)];
    std::vector<RatFunc> tr_tw, io_tw;
    for (const auto& a : cands) {
      UModule Vja = twist(Vj, a);
      if (hom_dim_bound(tensor(Vi, Vja), k) > 0 && !hom_space(tensor(Vi, Vja), k).empty()) tr_tw.push_back(a);
      if (hom_dim_bound(k, tensor(Vja, Vi)) > 0 && !hom_space(k, tensor(Vja, Vi)).empty()) io_tw.push_back(a);
    }
    if (tr_tw.empty()) continue;
    if (res.partner >= 0) throw std::runtime_error("several duality partners");
    res.partner = j;
    res.tr_twists = tr_tw;
    res.iota_twists = io_tw;
  }
  if (res.partner < 0) throw std::runtime_error("no duality twist found in scan range");
  res.z0 = res.tr_twists.front();
  const UModule& Vj = modules[static_cast<std::size_t>(res.partner)];
  UModule Vjz = twist(Vj, res.z0);
  res.tr = normalize_first(hom_space(tensor(Vi, Vjz), k).front());
  auto io = hom_space(k, tensor(Vjz, Vi));
  if (!io.empty()) {
    res.iota = normalize_first(io.front());
    // (tr (x) id)(id (x) iota) on V_i
    const int di = Vi.dim(), dj = Vj.dim();
    RMat zig(di, di);
    for (int b = 0; b < di; ++b)
      for (int x = 0; x < dj; ++x) {
        RatFunc tv = res.tr.get(0, b * dj + x);
        if (tv.is_zero()) continue;
        for (int y = 0; y < di; ++y) {
          RatFunc iv = res.iota.get(x * di + y, 0);
          if (!iv.is_zero()) zig.add(y, b, tv * iv);
        }
      }
    RatFunc c = zig.get(0, 0);
    res.composite = zig == RMat::identity(di).scaled(c) ? c : RatFunc(0);
  }
  return res;
}

RVec apply(const RMat& m, const RVec& v) { return m.apply(v); }

std::string vec_string(const UModule& m, const RVec& v) {
  std::ostringstream os;
  bool first = true;
  for (int b = 0; b < m.dim(); ++b) {
    const RatFunc& c = v[static_cast<std::size_t>(b)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.to_string() << ")*";
    os << m.label(b);
  }
  return first ? "0" : os.str();
}

}  // namespace qaff
