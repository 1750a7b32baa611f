#include "qaff/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qaff {

std::string rule_name(TensorRule r) { return r == TensorRule::Kashiwara ? "kashiwara" : "mirrored"; }

CrystalGraph::CrystalGraph(RootData rd, std::vector<std::string> labels, std::vector<Weight> wts)
    : rd_(rd), labels_(std::move(labels)), wt_(std::move(wts)) {
  if (labels_.size() != wt_.size()) throw std::invalid_argument("labels and weights differ in length");
  auto n = static_cast<std::size_t>(rd_.num_nodes());
  e_.assign(n, std::vector<int>(labels_.size(), -1));
  f_.assign(n, std::vector<int>(labels_.size(), -1));
}

int CrystalGraph::find(const std::string& label) const {
  for (int b = 0; b < size(); ++b)
    if (labels_[static_cast<std::size_t>(b)] == label) return b;
  return -1;
}

void CrystalGraph::set_arrow(int i, int b, int c) {
  f_[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] = c;
  e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = b;
}

int CrystalGraph::eps(int i, int b) const {
  int k = 0;
  for (int x = e(i, b); x >= 0; x = e(i, x)) {
    if (++k > size()) throw std::logic_error("infinite e-string");
  }
  return k;
}

int CrystalGraph::phi(int i, int b) const {
  int k = 0;
  for (int x = f(i, b); x >= 0; x = f(i, x)) {
    if (++k > size()) throw std::logic_error("infinite f-string");
  }
  return k;
}

int CrystalGraph::e_max(int i, int b) const {
  for (int x = e(i, b); x >= 0; x = e(i, x)) b = x;
  return b;
}

int CrystalGraph::f_pow(int i, int b, int k) const {
  for (int j = 0; j < k && b >= 0; ++j) b = f(i, b);
  return b;
}

int CrystalGraph::e_pow(int i, int b, int k) const {
  for (int j = 0; j < k && b >= 0; ++j) b = e(i, b);
  return b;
}

std::vector<std::string> CrystalGraph::check_axioms() const {
  std::vector<std::string> bad;
  const int ni = rd_.num_nodes();
  for (int i = 0; i < ni; ++i)
    for (int b = 0; b < size(); ++b) {
      int c = f(i, b);
      if (c >= 0) {
        if (e(i, c) != b) bad.push_back("e/f not inverse at " + label(b) + " i=" + std::to_string(i));
        if (wt(c) != wt(b) - rd_.alpha(i)) bad.push_back("weight of f_" + std::to_string(i) + " " + label(b));
      }
      int d = e(i, b);
      if (d >= 0 && f(i, d) != b) bad.push_back("f/e not inverse at " + label(b) + " i=" + std::to_string(i));
      try {
        if (phi(i, b) - eps(i, b) != rd_.pairing(i, wt(b)))
          bad.push_back("phi - eps != <h_i, wt> at " + label(b) + " i=" + std::to_string(i));
      } catch (const std::logic_error& ex) {
        bad.push_back(ex.what());
      }
    }
  // rank-2 consistency: characters of {i,j}-components are s_i, s_j invariant
  for (int i = 0; i < ni; ++i)
    for (int j = i + 1; j < ni; ++j) {
      std::vector<int> comp(static_cast<std::size_t>(size()), -1);
      int nc = 0;
      for (int b = 0; b < size(); ++b) {
        if (comp[static_cast<std::size_t>(b)] >= 0) continue;
        std::deque<int> q{b};
        comp[static_cast<std::size_t>(b)] = nc;
        while (!q.empty()) {
          int x = q.front();
          q.pop_front();
          for (int y : {e(i, x), f(i, x), e(j, x), f(j, x)})
            if (y >= 0 && comp[static_cast<std::size_t>(y)] < 0) {
              comp[static_cast<std::size_t>(y)] = nc;
              q.push_back(y);
            }
        }
        ++nc;
      }
      std::vector<std::map<Weight, int>> ch(static_cast<std::size_t>(nc));
      for (int b = 0; b < size(); ++b) ch[static_cast<std::size_t>(comp[static_cast<std::size_t>(b)])][wt(b)]++;
      for (const auto& m : ch)
        for (const auto& [w, cnt] : m)
          for (int k : {i, j}) {
            auto it = m.find(rd_.reflect(k, w));
            if (it == m.end() || it->second != cnt) {
              bad.push_back("rank-2 character not W-invariant for (" + std::to_string(i) + "," + std::to_string(j) + ")");
              goto next_pair;
            }
          }
    next_pair:;
    }
  return bad;
}

std::string CrystalGraph::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int b = 0; b < size(); ++b) os << "  n" << b << " [label=\"" << label(b) << "\"];\n";
  for (int b = 0; b < size(); ++b)
    for (int i = 0; i < rd_.num_nodes(); ++i)
      if (f(i, b) >= 0) os << "  n" << b << " -> n" << f(i, b) << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b, TensorRule rule) {
  if (a.root_data().type() != b.root_data().type()) throw std::invalid_argument("type mismatch");
  const int na = a.size(), nb = b.size();
  std::vector<std::string> labels;
  std::vector<Weight> wts;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      labels.push_back(a.label(x) + "⊗" + b.label(y));
      wts.push_back(a.wt(x) + b.wt(y));
    }
  CrystalGraph t(a.root_data(), labels, wts);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) t.factors.emplace_back(x, y);
  auto idx = [nb](int x, int y) { return x * nb + y; };
  for (int i = 0; i < a.root_data().num_nodes(); ++i)
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < nb; ++y) {
        bool left;
        if (rule == TensorRule::Kashiwara)
          left = a.phi(i, x) > b.eps(i, y);
        else
          left = !(b.phi(i, y) > a.eps(i, x));
        int target = -1;
        if (left) {
          int fx = a.f(i, x);
          if (fx >= 0) target = idx(fx, y);
        } else {
          int fy = b.f(i, y);
          if (fy >= 0) target = idx(x, fy);
        }
        if (target >= 0) t.set_arrow(i, idx(x, y), target);
      }
  return t;
}

CrystalGraph disjoint_union(const CrystalGraph& a, const CrystalGraph& b) {
  std::vector<std::string> labels;
  std::vector<Weight> wts;
  for (int x = 0; x < a.size(); ++x) {
    labels.push_back("L:" + a.label(x));
    wts.push_back(a.wt(x));
  }
  for (int x = 0; x < b.size(); ++x) {
    labels.push_back("R:" + b.label(x));
    wts.push_back(b.wt(x));
  }
  CrystalGraph u(a.root_data(), labels, wts);
  for (int i = 0; i < a.root_data().num_nodes(); ++i) {
    for (int x = 0; x < a.size(); ++x)
      if (a.f(i, x) >= 0) u.set_arrow(i, x, a.f(i, x));
    for (int x = 0; x < b.size(); ++x)
      if (b.f(i, x) >= 0) u.set_arrow(i, a.size() + x, a.size() + b.f(i, x));
  }
  return u;
}

int weyl_action(const CrystalGraph& B, int i, int b) {
  int k = B.root_data().pairing(i, B.wt(b));
  int r = k >= 0 ? B.f_pow(i, b, k) : B.e_pow(i, b, -k);
  if (r < 0) throw std::logic_error("crystal is not regular along the " + std::to_string(i) + "-string");
  return r;
}

std::vector<int> weyl_orbit(const CrystalGraph& B, int b) {
  std::vector<int> orbit{b};
  std::set<int> seen{b};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (int i = 0; i < B.root_data().num_nodes(); ++i) {
      int c = weyl_action(B, i, orbit[k]);
      if (seen.insert(c).second) orbit.push_back(c);
    }
  return orbit;
}

bool is_i_extremal(const CrystalGraph& B, int i, int b) { return B.e(i, b) < 0 || B.f(i, b) < 0; }

bool is_extremal(const CrystalGraph& B, int b) {
  for (int c : weyl_orbit(B, b))
    for (int i = 0; i < B.root_data().num_nodes(); ++i)
      if (!is_i_extremal(B, i, c)) return false;
  return true;
}

std::vector<int> emax_closure(const CrystalGraph& B, int b) {
  std::vector<int> out{b};
  std::set<int> seen{b};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < B.root_data().num_nodes(); ++i) {
      int c = B.e_max(i, out[k]);
      if (seen.insert(c).second) out.push_back(c);
    }
  return out;
}

int extremalize(const CrystalGraph& B, int b) {
  const RootData& rd = B.root_data();
  for (int guard = 0; guard <= B.size(); ++guard) {
    auto F = emax_closure(B, b);
    int best = F[0];
    Rational bn = rd.inner(B.wt(best), B.wt(best));
    for (int c : F) {
      Rational cn = rd.inner(B.wt(c), B.wt(c));
      if (cn > bn) {
        best = c;
        bn = cn;
      }
    }
    if (is_extremal(B, best)) return best;
    b = best;
  }
  throw std::logic_error("extremalize did not converge");
}

bool is_connected(const CrystalGraph& B) {
  if (B.size() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(B.size()), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int i = 0; i < B.root_data().num_nodes(); ++i)
      for (int y : {B.e(i, x), B.f(i, x)})
        if (y >= 0 && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++count;
          q.push_back(y);
        }
  }
  return count == B.size();
}

bool in_hull(const RootData& rd, const Weight& lambda, const Weight& mu) {
  Weight d = rd.dominant_rep(lambda) - rd.dominant_rep(mu);
  for (const auto& c : rd.root_coords(d))
    if (c < 0) return false;
  return true;
}

SimplicityReport is_simple(const CrystalGraph& B) {
  SimplicityReport rep;
  const RootData& rd = B.root_data();
  if (!B.check_axioms().empty()) {
    rep.reason = "not a regular crystal";
    return rep;
  }
  std::vector<int> ext;
  for (int b = 0; b < B.size(); ++b)
    if (is_extremal(B, b)) ext.push_back(b);
  if (ext.empty()) {
    rep.reason = "no extremal vectors";
    return rep;
  }
  // lambda: the largest dominant representative among extremal weights
  Weight lam = rd.dominant_rep(B.wt(ext[0]));
  for (int b : ext) {
    Weight d = rd.dominant_rep(B.wt(b));
    if (rd.inner(d, d) > rd.inner(lam, lam)) lam = d;
  }
  rep.lambda = lam;
  rep.hull = true;
  for (int b = 0; b < B.size(); ++b)
    if (!in_hull(rd, lam, B.wt(b))) {
      rep.hull = false;
      break;
    }
  int cnt = 0;
  for (int b = 0; b < B.size(); ++b) cnt += B.wt(b) == lam;
  rep.unique = cnt == 1;
  rep.extremal_orbit = true;
  for (int b : ext)
    if (rd.dominant_rep(B.wt(b)) != lam) rep.extremal_orbit = false;
  rep.simple = rep.hull && rep.unique && rep.extremal_orbit;
  if (!rep.hull) rep.reason = "weights outside the convex hull";
  else if (!rep.unique) rep.reason = "weight space of lambda has " + std::to_string(cnt) + " elements";
  else if (!rep.extremal_orbit) rep.reason = "extremal weight outside the orbit of lambda";
  return rep;
}

bool same_chamber(const RootData& rd, const Weight& a, const Weight& b) {
  std::set<std::pair<Weight, Weight>> seen{{a, b}};
  std::deque<std::pair<Weight, Weight>> q{{a, b}};
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop_front();
    if (rd.is_dominant(x) && rd.is_dominant(y)) return true;
    for (int i = 1; i <= rd.rank(); ++i) {
      std::pair<Weight, Weight> nx{rd.reflect(i, x), rd.reflect(i, y)};
      if (seen.insert(nx).second) q.push_back(nx);
    }
  }
  return false;
}

std::vector<int> raising_word(const RootData& rd, const Weight& lambda, const Weight& mu) {
  if (rd.dominant_rep(lambda) != rd.dominant_rep(mu)) throw std::invalid_argument("not in same orbit");
  std::map<Weight, std::pair<Weight, int>> parent;
  std::deque<Weight> q{lambda};
  parent.emplace(lambda, std::make_pair(lambda, -1));
  while (!q.empty()) {
    Weight x = q.front();
    q.pop_front();
    if (x == mu) {
      std::vector<int> word;
      for (Weight y = mu; y != lambda;) {
        auto& [p, i] = parent.at(y);
        word.push_back(i);
        y = p;
      }
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (int i = 0; i < rd.num_nodes(); ++i) {
      if (rd.pairing(i, x) <= 0) continue;
      Weight y = rd.reflect(i, x);
      if (parent.emplace(y, std::make_pair(x, i)).second) q.push_back(y);
    }
  }
  throw std::invalid_argument("not in same orbit");
}

}  // namespace qaff
