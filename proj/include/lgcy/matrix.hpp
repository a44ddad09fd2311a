#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lgcy/error.hpp"
#include "lgcy/scalars.hpp"

namespace lgcy {

using Complex = std::complex<double>;

inline bool coeff_is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }

inline Rational conj_value(const Rational& q) { return q; }
inline GaussianRational conj_value(const GaussianRational& z) { return z.conj(); }
inline Complex conj_value(const Complex& z) { return std::conj(z); }

inline double magnitude(const Complex& z) { return std::abs(z); }

inline Complex to_complex(const Rational& q) { return {q.get_d(), 0.0}; }
inline Complex to_complex(const GaussianRational& z) { return {z.re().get_d(), z.im().get_d()}; }

// Sparse vector stored as (index, value) pairs with strictly increasing
// indices and no explicit zeros.
template <class T>
using SparseVector = std::vector<std::pair<std::uint32_t, T>>;

template <class T>
void axpy(SparseVector<T>& y, const T& a, const SparseVector<T>& x) {
  if (coeff_is_zero(a) || x.empty()) return;
  SparseVector<T> out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      T v = iy->second + a * ix->second;
      if (!coeff_is_zero(v)) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

// Column-compressed sparse matrix over an exact or float scalar type.
template <class T>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) { data_.resize(cols); }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), T(1));
    return m;
  }

  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector<T>> columns) {
    SparseMatrix m(rows, columns.size());
    m.data_ = std::move(columns);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector<T>& column(std::size_t j) const { return data_[j]; }
  SparseVector<T>& column(std::size_t j) { return data_[j]; }

  T get(std::size_t i, std::size_t j) const {
    const auto& c = data_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != c.end() && it->first == i) return it->second;
    return T(0);
  }

  void set(std::size_t i, std::size_t j, T v) {
    auto& c = data_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != c.end() && it->first == i) {
      if (coeff_is_zero(v))
        c.erase(it);
      else
        it->second = std::move(v);
    } else if (!coeff_is_zero(v)) {
      c.insert(it, {static_cast<std::uint32_t>(i), std::move(v)});
    }
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
  }

  bool is_zero() const {
    for (const auto& c : data_)
      if (!c.empty()) return false;
    return true;
  }

  SparseVector<T> apply(const SparseVector<T>& x) const {
    SparseVector<T> y;
    for (const auto& [j, v] : x) axpy(y, v, data_[j]);
    return y;
  }

  SparseMatrix transpose() const {
    std::vector<SparseVector<T>> cols(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) cols[i].emplace_back(static_cast<std::uint32_t>(j), v);
    return from_columns(cols_, std::move(cols));
  }

  SparseMatrix conjugate() const {
    SparseMatrix m = *this;
    for (auto& c : m.data_)
      for (auto& e : c) e.second = conj_value(e.second);
    return m;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    SparseMatrix<U> m(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) {
        U u = f(v);
        if (!coeff_is_zero(u)) m.column(j).emplace_back(i, std::move(u));
      }
    return m;
  }

  // Rows/columns picked by index lists.
  SparseMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    std::vector<std::int64_t> row_map(rows_, -1);
    for (std::size_t k = 0; k < rows.size(); ++k) row_map[rows[k]] = static_cast<std::int64_t>(k);
    SparseMatrix m(rows.size(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      for (const auto& [i, v] : data_[cols[k]])
        if (row_map[i] >= 0) m.data_[k].emplace_back(static_cast<std::uint32_t>(row_map[i]), v);
      std::sort(m.data_[k].begin(), m.data_[k].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    SparseMatrix m(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) m.data_[j] = a.apply(b.data_[j]);
    return m;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, T(1)); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, T(-1)); }
  friend SparseMatrix operator*(const T& s, const SparseMatrix& a) {
    SparseMatrix m(a.rows_, a.cols_);
    if (coeff_is_zero(s)) return m;
    for (std::size_t j = 0; j < a.cols_; ++j)
      for (const auto& [i, v] : a.data_[j]) m.data_[j].emplace_back(i, s * v);
    return m;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, const T& sb) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    SparseMatrix m = a;
    for (std::size_t j = 0; j < a.cols_; ++j) axpy(m.data_[j], sb, b.data_[j]);
    return m;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector<T>> data_;
};

using RationalMatrix = SparseMatrix<Rational>;
using GaussianMatrix = SparseMatrix<GaussianRational>;
using ComplexMatrix = SparseMatrix<Complex>;

// Largest entry magnitude; used for float residuals.
inline double max_abs(const ComplexMatrix& m) {
  double r = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) r = std::max(r, magnitude(e.second));
  return r;
}

namespace detail {

// Row-wise sparse elimination. Rows are eliminated in place; returns the
// pivot list (row, col) of the echelon form.
template <class T>
struct Elimination {
  std::vector<SparseVector<T>> rows;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

template <class T>
Elimination<T> eliminate(const SparseMatrix<T>& a, bool reduce_above) {
  // Build rows from columns.
  SparseMatrix<T> t = a.transpose();
  Elimination<T> e;
  e.rows.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) e.rows[i] = t.column(i);

  // Pivot row owning each column.
  std::map<std::size_t, std::size_t> owner;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    auto& r = e.rows[i];
    // Reduce against existing pivots until the leading entry is new.
    while (!r.empty()) {
      auto it = owner.find(r.front().first);
      if (it == owner.end()) break;
      const auto& p = e.rows[it->second];
      T factor = -r.front().second / p.front().second;
      axpy(r, factor, p);
    }
    if (r.empty()) continue;
    // Normalize the pivot to 1.
    T inv = T(1) / r.front().second;
    for (auto& x : r) x.second = x.second * inv;
    owner[r.front().first] = i;
  }
  for (const auto& [col, row] : owner) e.pivots.emplace_back(row, col);
  if (reduce_above) {
    // Back-substitute so that pivot columns are unit vectors. Process pivots
    // from the rightmost column leftwards.
    for (auto p = e.pivots.rbegin(); p != e.pivots.rend(); ++p) {
      const auto& pr = e.rows[p->first];
      for (auto q = e.pivots.begin(); q != e.pivots.end(); ++q) {
        if (q->first == p->first) continue;
        auto& r = e.rows[q->first];
        auto it = std::lower_bound(r.begin(), r.end(), p->second,
                                   [](const auto& x, std::size_t k) { return x.first < k; });
        if (it != r.end() && it->first == p->second) {
          T factor = -it->second;
          axpy(r, factor, pr);
        }
      }
    }
  }
  return e;
}

}  // namespace detail

// Exact rank (for float scalars the elimination uses exact zero tests, so
// callers keep float rank computations out of this routine).
template <class T>
std::size_t rank(const SparseMatrix<T>& a) {
  return detail::eliminate(a, false).pivots.size();
}

// Exact inverse; throws RankDeficient when singular.
template <class T>
SparseMatrix<T> inverse(const SparseMatrix<T>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  // Augment [A | I] column-wise, eliminate rows.
  SparseMatrix<T> aug(n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) aug.column(j) = a.column(j);
  for (std::size_t j = 0; j < n; ++j) aug.column(n + j).emplace_back(static_cast<std::uint32_t>(j), T(1));
  auto e = detail::eliminate(aug, true);
  std::size_t full = 0;
  for (const auto& [row, col] : e.pivots)
    if (col < n) ++full;
  if (full != n) throw Error(ErrorCode::RankDeficient, "matrix is singular");
  std::vector<SparseVector<T>> inv_rows(n);
  for (const auto& [row, col] : e.pivots) {
    if (col >= n) continue;
    SparseVector<T> r;
    for (const auto& [k, v] : e.rows[row])
      if (k >= n) r.emplace_back(static_cast<std::uint32_t>(k - n), v);
    inv_rows[col] = std::move(r);
  }
  // inv_rows[i] is row i of the inverse.
  return SparseMatrix<T>::from_columns(n, std::move(inv_rows)).transpose();
}

// Solves A X = B exactly for square invertible A.
template <class T>
SparseMatrix<T> solve(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  return inverse(a) * b;
}

}  // namespace lgcy
