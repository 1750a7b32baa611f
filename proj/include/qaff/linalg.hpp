#pragma once
// Exact elimination over RatFunc, BiRat or Fp.

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qaff {

template <class T>
using Mat = std::vector<std::vector<T>>;
template <class T>
using Vec = std::vector<T>;

template <class T>
Mat<T> zero_mat(std::size_t r, std::size_t c) {
  return Mat<T>(r, Vec<T>(c));
}

template <class T>
bool is_zero_vec(const Vec<T>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// In-place reduced row echelon form over the first ncols columns (row
// operations act on whole rows); returns pivot columns. Among candidate
// pivots the lightest entry wins, ties to the lowest row.
template <class T>
std::vector<int> rref(Mat<T>& m, std::size_t ncols) {
  std::vector<int> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t best = m.size(), bw = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = r; i < m.size(); ++i)
      if (!m[i][c].is_zero() && m[i][c].weight() < bw) {
        best = i;
        bw = m[i][c].weight();
      }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    T inv = m[r][c].inverse();
    const std::size_t width = m[r].size();
    for (std::size_t j = c; j < width; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      T f = m[i][c];
      for (std::size_t j = c; j < width; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}

template <class T>
std::size_t rank(Mat<T> m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

// Basis of {x : m x = 0}; each vector has a 1 at its free column.
template <class T>
std::vector<Vec<T>> nullspace(Mat<T> m, std::size_t ncols) {
  auto piv = rref(m, ncols);
  std::vector<char> is_piv(ncols, 0);
  for (int p : piv) is_piv[static_cast<std::size_t>(p)] = 1;
  std::vector<Vec<T>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Vec<T> x(ncols);
    x[f] = T(1);
    for (std::size_t k = 0; k < piv.size(); ++k)
      if (!m[k][f].is_zero()) x[static_cast<std::size_t>(piv[k])] = -m[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

// Solves a X = b column by column; nullopt when inconsistent.
template <class T>
std::optional<Mat<T>> solve(const Mat<T>& a, const Mat<T>& b, std::size_t ncols) {
  std::size_t nr = a.size(), nb = b.empty() ? 0 : b[0].size();
  Mat<T> aug(nr, Vec<T>(ncols + nb));
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) aug[i][j] = a[i][j];
    for (std::size_t j = 0; j < nb; ++j) aug[i][ncols + j] = b[i][j];
  }
  auto piv = rref(aug, ncols);
  for (std::size_t i = piv.size(); i < nr; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (!aug[i][ncols + j].is_zero()) return std::nullopt;
  Mat<T> x(ncols, Vec<T>(nb));
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t j = 0; j < nb; ++j) x[static_cast<std::size_t>(piv[k])][j] = aug[k][ncols + j];
  return x;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& a) {
  std::size_t n = a.size();
  Mat<T> id(n, Vec<T>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = T(1);
  Mat<T> aug(n, Vec<T>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      aug[i][j] = a[i][j];
      aug[i][n + j] = id[i][j];
    }
  auto piv = rref(aug, n);
  if (piv.size() != n) return std::nullopt;
  Mat<T> out(n, Vec<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

template <class T>
Mat<T> transpose(const Mat<T>& a, std::size_t ncols) {
  Mat<T> t(ncols, Vec<T>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = a[i][j];
  return t;
}

template <class T>
Mat<T> matmul(const Mat<T>& a, const Mat<T>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat<T> c(n, Vec<T>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

// Incrementally maintained echelon basis of a subspace of T^n.
template <class T>
class Echelon {
 public:
  explicit Echelon(std::size_t n = 0) : n_(n) {}
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec<T>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  // Reduces v against the basis in place.
  void reduce(Vec<T>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T& c = v[piv_[k]];
      if (c.is_zero()) continue;
      T f = c;
      const Vec<T>& r = rows_[k];
      for (std::size_t j = 0; j < n_; ++j)
        if (!r[j].is_zero()) v[j] -= f * r[j];
    }
  }
  bool contains(Vec<T> v) const {
    reduce(v);
    return is_zero_vec(v);
  }
  // Adds v if independent; returns whether it was.
  bool add(Vec<T> v) {
    reduce(v);
    std::size_t p = n_, bw = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < n_; ++j)
      if (!v[j].is_zero() && v[j].weight() < bw) {
        p = j;
        bw = v[j].weight();
      }
    if (p == n_) return false;
    T inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    // keep earlier rows reduced at the new pivot
    for (auto& r : rows_) {
      if (r[p].is_zero()) continue;
      T f = r[p];
      for (std::size_t j = 0; j < n_; ++j)
        if (!v[j].is_zero()) r[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Vec<T>> rows_;
  std::vector<std::size_t> piv_;
};

// Sparse rows: (column, value) pairs, sorted by column.
template <class T>
using SparseRow = std::vector<std::pair<int, T>>;

template <class T>
SparseRow<T> axpy_row(const SparseRow<T>& x, const T& a, const SparseRow<T>& y) {
  // x + a*y
  SparseRow<T> out;
  out.reserve(x.size() + y.size());
  std::size_t p = 0, q = 0;
  while (p < x.size() || q < y.size()) {
    if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
      out.push_back(x[p++]);
    } else if (p == x.size() || y[q].first < x[p].first) {
      out.emplace_back(y[q].first, a * y[q].second);
      ++q;
    } else {
      T v = x[p].second + a * y[q].second;
      if (!v.is_zero()) out.emplace_back(x[p].first, std::move(v));
      ++p;
      ++q;
    }
  }
  return out;
}

// Sparse Gaussian elimination for homogeneous systems.
template <class T>
class SparseSystem {
 public:
  explicit SparseSystem(int ncols) : n_(ncols), row_of_(static_cast<std::size_t>(ncols), -1) {}
  int ncols() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Returns whether the row was independent of those added before.
  bool add(SparseRow<T> r) {
    // eliminate the earliest stored row first; row k only holds pivots of rows > k
    for (;;) {
      int kmin = -1;
      T f;
      for (const auto& [c, v] : r) {
        int k = row_of_[static_cast<std::size_t>(c)];
        if (k >= 0 && (kmin < 0 || k < kmin)) {
          kmin = k;
          f = -v;
        }
      }
      if (kmin < 0) break;
      r = axpy_row(r, f, rows_[static_cast<std::size_t>(kmin)]);
    }
    if (r.empty()) return false;
    std::size_t best = 0, bw = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i].second.weight() < bw) {
        best = i;
        bw = r[i].second.weight();
      }
    int pc = r[best].first;
    T inv = r[best].second.inverse();
    for (auto& e : r) e.second *= inv;
    row_of_[static_cast<std::size_t>(pc)] = static_cast<int>(rows_.size());
    pivot_.push_back(pc);
    rows_.push_back(std::move(r));
    return true;
  }

  std::vector<Vec<T>> nullspace() const {
    std::vector<Vec<T>> out;
    for (int f = 0; f < n_; ++f) {
      if (row_of_[static_cast<std::size_t>(f)] >= 0) continue;
      Vec<T> x(static_cast<std::size_t>(n_));
      x[static_cast<std::size_t>(f)] = T(1);
      for (std::size_t k = rows_.size(); k-- > 0;) {
        T acc(0);
        for (const auto& [c, v] : rows_[k])
          if (c != pivot_[k] && !x[static_cast<std::size_t>(c)].is_zero()) acc += v * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(pivot_[k])] = -acc;
      }
      // other free columns stay zero
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int n_;
  std::vector<int> row_of_;
  std::vector<int> pivot_;
  std::vector<SparseRow<T>> rows_;
};

}  // namespace qaff
