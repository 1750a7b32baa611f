#include "qaff/rootdata.hpp"

#include <sstream>
#include <stdexcept>

namespace qaff {

std::string family_name(Family f) { return f == Family::A ? "A" : "C"; }

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "C" || s == "c") return Family::C;
  throw std::invalid_argument("unknown family: " + s);
}

Weight& Weight::operator+=(const Weight& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

RootData::RootData(AffineType t) : t_(t) {
  if (t.n < 2) throw std::invalid_argument("rank parameter n must be at least 2");
}

std::string RootData::name() const {
  return t_.family == Family::A ? "A^(1)_" + std::to_string(t_.n - 1) : "C^(1)_" + std::to_string(t_.n);
}

void RootData::check_index(int i) const {
  if (i < 0 || i >= num_nodes()) throw std::out_of_range("index out of range");
}

int RootData::cartan(int i, int j) const {
  check_index(i);
  check_index(j);
  if (t_.family == Family::A) {
    if (i == j) return 2;
    int n = t_.n;
    int up = ((i - j) % n + n) % n == 1, down = ((j - i) % n + n) % n == 1;
    return -(up + down);
  }
  return pairing(i, alpha(j));
}

std::vector<int> RootData::marks() const {
  std::vector<int> m(static_cast<std::size_t>(num_nodes()), 1);
  if (t_.family == Family::C)
    for (int i = 1; i < t_.n; ++i) m[static_cast<std::size_t>(i)] = 2;
  return m;
}

std::vector<int> RootData::comarks() const { return std::vector<int>(static_cast<std::size_t>(num_nodes()), 1); }

int RootData::pairing(int i, const Weight& w) const {
  check_index(i);
  if (static_cast<int>(w.c.size()) != rank()) throw std::invalid_argument("weight size mismatch");
  if (t_.family == Family::A) {
    if (i > 0) return w.c[static_cast<std::size_t>(i - 1)];
    int s = 0;
    for (int x : w.c) s += x;
    return -s;
  }
  if (i == 0) return -w.c[0];
  if (i == t_.n) return w.c[static_cast<std::size_t>(t_.n - 1)];
  return w.c[static_cast<std::size_t>(i - 1)] - w.c[static_cast<std::size_t>(i)];
}

Rational RootData::inner(const Weight& a, const Weight& b) const {
  Rational r = 0;
  if (t_.family == Family::C) {
    for (std::size_t i = 0; i < a.c.size(); ++i) r += Rational(a.c[i] * b.c[i]);
    return r / 2;
  }
  int n = t_.n;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      int x = a.c[static_cast<std::size_t>(i - 1)] * b.c[static_cast<std::size_t>(j - 1)];
      if (x) r += Rational(x) * (Rational(std::min(i, j)) - Rational(i * j, n));
    }
  return r;
}

Weight RootData::alpha(int i) const {
  check_index(i);
  Weight w = zero();
  if (t_.family == Family::A) {
    for (int j = 1; j < t_.n; ++j) w.c[static_cast<std::size_t>(j - 1)] = cartan(j, i);
    return w;
  }
  if (i == 0)
    w.c[0] = -2;
  else if (i == t_.n)
    w.c[static_cast<std::size_t>(t_.n - 1)] = 2;
  else {
    w.c[static_cast<std::size_t>(i - 1)] = 1;
    w.c[static_cast<std::size_t>(i)] = -1;
  }
  return w;
}

Weight RootData::fundamental(int k) const {
  Weight w = zero();
  if (t_.family == Family::A) {
    if (k < 0 || k > t_.n) throw std::out_of_range("fundamental weight index");
    if (k > 0 && k < t_.n) w.c[static_cast<std::size_t>(k - 1)] = 1;
    return w;
  }
  if (k < 0 || k > t_.n) throw std::out_of_range("fundamental weight index");
  for (int i = 0; i < k; ++i) w.c[static_cast<std::size_t>(i)] = 1;
  return w;
}

int RootData::qi_exp(int i) const {
  check_index(i);
  if (t_.family == Family::A) return 2;
  return (i == 0 || i == t_.n) ? 2 : 1;
}

int RootData::dual_index(int i) const {
  check_index(i);
  if (t_.family == Family::C) return i;
  return (t_.n - i) % t_.n;
}

DualityConstants RootData::constants() const {
  DualityConstants c{};
  int dr = 0, rd = 0;
  for (int x : comarks()) dr += x;
  for (int x : marks()) rd += x;
  c.delta_rho = dr;
  c.rho_vee_delta = rd;
  c.gamma = t_.family == Family::A ? 1 : 2;
  c.pstar_sign = (rd % 2) ? -1 : 1;
  c.pstar_sexp = 2 * dr;
  if (t_.family == Family::A) {
    c.alt_pstar_sign = ((t_.n + 1) % 2) ? -1 : 1;
    c.alt_pstar_sexp = 2 * (t_.n + 1);
  } else {
    c.alt_pstar_sign = c.pstar_sign;
    c.alt_pstar_sexp = c.pstar_sexp;
  }
  return c;
}

Weight RootData::reflect(int i, const Weight& w) const { return w - pairing(i, w) * alpha(i); }

bool RootData::is_dominant(const Weight& w) const {
  for (int i = 1; i <= rank(); ++i)
    if (pairing(i, w) < 0) return false;
  return true;
}

Weight RootData::dominant_rep(const Weight& w) const {
  Weight v = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i <= rank(); ++i)
      if (pairing(i, v) < 0) {
        v = reflect(i, v);
        changed = true;
      }
  }
  return v;
}

std::vector<Rational> RootData::root_coords(const Weight& w) const {
  const auto r = static_cast<std::size_t>(rank());
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
  for (std::size_t j = 0; j < r; ++j) {
    Weight a = alpha(static_cast<int>(j) + 1);
    for (std::size_t i = 0; i < r; ++i) m[i][j] = a.c[i];
  }
  for (std::size_t i = 0; i < r; ++i) m[i][r] = w.c[i];
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= r; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = m[i][r] / m[i][i];
  return out;
}

}  // namespace qaff
