#pragma once

// Dense exact matrices: RREF, rank, row-space comparison, determinants.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/scalar.hpp"

namespace bethe {

template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      require(row.size() == cols_, "dimension_mismatch", "ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, "dimension_mismatch", "row length differs from column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    require(r.size() == cols_, "dimension_mismatch", "appended row has wrong length");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!((*this)(i, j) == T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    require(x.cols_ == y.rows_, "dimension_mismatch", "matrix product shapes differ");
    Matrix p(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
      }
    return p;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "dimension_mismatch", "matrix sum shapes differ");
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "dimension_mismatch", "matrix difference shapes differ");
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }
  friend Matrix operator*(const T& s, Matrix x) {
    for (auto& v : x.a_) v = s * v;
    return x;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const T& v) { return v == T(0); });
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using ExactMatrix = Matrix<Scalar>;

/// Reduced row echelon form; zero rows are kept at the bottom.
/// Pivot: leftmost column with a nonzero entry, first such row.
template <typename T>
Matrix<T> rref(Matrix<T> m, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == T(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

/// RREF with zero rows removed: the canonical basis of the row space.
template <typename T>
Matrix<T> row_basis(const Matrix<T>& m) {
  Matrix<T> e = rref(m);
  Matrix<T> out(0, m.cols());
  for (std::size_t i = 0; i < e.rows(); ++i)
    if (!e.row_is_zero(i)) out.append_row(e.row(i));
  return out;
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

template <typename T>
bool rowspace_equal(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols() == b.cols(), "dimension_mismatch",
          "row spaces live in different dimensions (" + std::to_string(a.cols()) + " vs " +
              std::to_string(b.cols()) + ")");
  return row_basis(a) == row_basis(b);
}

/// True iff every row of `v` lies in the row space of `m`.
template <typename T>
bool in_rowspace(const Matrix<T>& m, const Matrix<T>& v) {
  Matrix<T> both = m;
  for (std::size_t i = 0; i < v.rows(); ++i) both.append_row(v.row(i));
  return rank(both) == rank(m);
}

/// Determinant by Gaussian elimination over a field.
template <typename T>
T det(Matrix<T> m) {
  require(m.rows() == m.cols(), "dimension_mismatch", "determinant of a non-square matrix");
  T d(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == T(0)) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == T(0)) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

/// Basis of {x : m x = 0}, one row per basis vector.
template <typename T>
Matrix<T> nullspace(const Matrix<T>& m) {
  std::vector<std::size_t> piv;
  Matrix<T> e = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  Matrix<T> out(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -e(i, f);
    out.append_row(v);
  }
  return out;
}

/// Lower or upper unitriangular (ones on the diagonal, zeros strictly on one side).
template <typename T>
bool is_unitriangular(const Matrix<T>& m) {
  if (m.rows() != m.cols()) return false;
  bool lower = true, upper = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j && !(m(i, j) == T(1))) return false;
      if (j > i && !(m(i, j) == T(0))) lower = false;
      if (j < i && !(m(i, j) == T(0))) upper = false;
    }
  return lower || upper;
}

} // namespace bethe
