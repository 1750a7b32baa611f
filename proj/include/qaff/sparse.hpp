#pragma once
// Row-sparse matrices over a field-like scalar type.

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qaff {

template <class T>
class SparseMatrix {
 public:
  using Entry = std::pair<int, T>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(static_cast<std::size_t>(rows)) {}

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.r_[static_cast<std::size_t>(i)].emplace_back(i, T(1));
    return m;
  }
  static SparseMatrix diagonal(const std::vector<T>& d) {
    int n = static_cast<int>(d.size());
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      if (!d[static_cast<std::size_t>(i)].is_zero()) m.r_[static_cast<std::size_t>(i)].emplace_back(i, d[static_cast<std::size_t>(i)]);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Row& row(int i) const { return r_[static_cast<std::size_t>(i)]; }
  Row& row_mut(int i) { return r_[static_cast<std::size_t>(i)]; }

  // Accumulates v into (i, j).
  void add(int i, int j, const T& v) {
    if (v.is_zero()) return;
    Row& row = r_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == j) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    } else {
      row.insert(it, Entry(j, v));
    }
  }
  void set(int i, int j, const T& v) {
    Row& row = r_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == j) {
      if (v.is_zero())
        row.erase(it);
      else
        it->second = v;
    } else if (!v.is_zero()) {
      row.insert(it, Entry(j, v));
    }
  }
  T get(int i, int j) const {
    const Row& row = r_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == j) ? it->second : T(0);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& row : r_) n += row.size();
    return n;
  }
  bool is_zero() const {
    for (const auto& row : r_)
      if (!row.empty()) return false;
    return true;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : row(i)) t.r_[static_cast<std::size_t>(j)].emplace_back(i, v);
    return t;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
    SparseMatrix c(a.rows_, b.cols_);
    std::vector<T> acc(static_cast<std::size_t>(b.cols_));
    std::vector<char> mark(static_cast<std::size_t>(b.cols_), 0);
    std::vector<int> touched;
    for (int i = 0; i < a.rows_; ++i) {
      touched.clear();
      for (const auto& [k, av] : a.row(i))
        for (const auto& [j, bv] : b.row(k)) {
          auto uj = static_cast<std::size_t>(j);
          if (!mark[uj]) {
            mark[uj] = 1;
            touched.push_back(j);
            acc[uj] = av * bv;
          } else {
            acc[uj] += av * bv;
          }
        }
      std::sort(touched.begin(), touched.end());
      Row& out = c.r_[static_cast<std::size_t>(i)];
      for (int j : touched) {
        auto uj = static_cast<std::size_t>(j);
        if (!acc[uj].is_zero()) out.emplace_back(j, std::move(acc[uj]));
        mark[uj] = 0;
        acc[uj] = T(0);
      }
    }
    return c;
  }

  SparseMatrix& operator+=(const SparseMatrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("dimension mismatch");
    for (int i = 0; i < rows_; ++i) {
      const Row& y = b.row(i);
      if (y.empty()) continue;
      Row& x = r_[static_cast<std::size_t>(i)];
      Row out;
      out.reserve(x.size() + y.size());
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
          out.push_back(std::move(x[p++]));
        } else if (p == x.size() || y[q].first < x[p].first) {
          out.push_back(y[q++]);
        } else {
          T v = x[p].second + y[q].second;
          if (!v.is_zero()) out.emplace_back(x[p].first, std::move(v));
          ++p;
          ++q;
        }
      }
      x = std::move(out);
    }
    return *this;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  SparseMatrix operator-() const {
    SparseMatrix m = *this;
    for (auto& row : m.r_)
      for (auto& e : row) e.second = -e.second;
    return m;
  }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a += -b; }
  SparseMatrix scaled(const T& c) const {
    if (c.is_zero()) return SparseMatrix(rows_, cols_);
    SparseMatrix m = *this;
    for (auto& row : m.r_)
      for (auto& e : row) e.second *= c;
    return m;
  }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, x] : row(i)) {
        const T& vj = v[static_cast<std::size_t>(j)];
        if (!vj.is_zero()) out[static_cast<std::size_t>(i)] += x * vj;
      }
    return out;
  }

  template <class F>
  auto map(F f) const -> SparseMatrix<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    SparseMatrix<U> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : row(i)) {
        U u = f(v);
        if (!u.is_zero()) m.row_mut(i).emplace_back(j, std::move(u));
      }
    return m;
  }

  // Restriction to the given row and column index lists, as a dense matrix.
  std::vector<std::vector<T>> block(const std::vector<int>& rs, const std::vector<int>& cs) const {
    std::vector<std::vector<T>> d(rs.size(), std::vector<T>(cs.size()));
    std::vector<int> pos(static_cast<std::size_t>(cols_), -1);
    for (std::size_t k = 0; k < cs.size(); ++k) pos[static_cast<std::size_t>(cs[k])] = static_cast<int>(k);
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (const auto& [j, v] : row(rs[a]))
        if (pos[static_cast<std::size_t>(j)] >= 0) d[a][static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])] = v;
    return d;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Row> r_;
};

template <class T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  SparseMatrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < b.rows(); ++k) {
      auto& out = m.row_mut(i * b.rows() + k);
      for (const auto& [j, av] : a.row(i))
        for (const auto& [l, bv] : b.row(k)) out.emplace_back(j * b.cols() + l, av * bv);
    }
  return m;
}

}  // namespace qaff
