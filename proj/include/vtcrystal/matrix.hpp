#pragma once

// Dense matrices over an exact field and the handful of elimination routines
// the rest of the library needs: row reduction, rank, kernels, solves.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace vtc {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix column(const std::vector<T>& v) {
    Matrix m(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }
  static Matrix from_columns(size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> col(size_t j) const {
    std::vector<T> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(size_t j, const std::vector<T>& v) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix shape mismatch");
    std::vector<T> y(a.rows_, T(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
    return y;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }
  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
  }
  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  template <class Fn>
  Matrix map(Fn&& fn) const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = fn(a_[k]);
    return m;
  }
  Matrix submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
    Matrix m(rs.size(), cs.size());
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Kronecker product.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j).is_zero()) continue;
        for (size_t k = 0; k < b.rows_; ++k)
          for (size_t l = 0; l < b.cols_; ++l)
            if (!b(k, l).is_zero()) m(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
      }
    return m;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

/// Reduced row echelon form in place; returns pivot columns.  Pivots are
/// chosen as the simplest nonzero entry in the column to limit growth.
template <class T>
std::vector<size_t> rref(Matrix<T>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::optional<size_t> best;
    for (size_t r = row; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      if (!best || m(r, c).complexity() < m(*best, c).complexity()) best = r;
    }
    if (!best) continue;
    if (*best != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(*best, j));
    const T inv = m(row, c).inverse();
    for (size_t j = c; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const T f = m(r, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class T>
size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column, with
/// a 1 in that free position (deterministic).
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  const auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> x(m.cols(), T(0));
    x[f] = T(1);
    for (size_t r = 0; r < piv.size(); ++r)
      if (!m(r, f).is_zero()) x[piv[r]] = -m(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("singular matrix") {}
};

/// Solves a x = b for square invertible a (several right-hand sides).
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  const size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  Matrix<T> aug(n, n + b.cols());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  const auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix{};
  Matrix<T> x(n, b.cols());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

/// Incremental independence test: feeds candidate vectors and keeps those
/// independent of the ones already accepted.
template <class T>
class IndependenceTracker {
 public:
  explicit IndependenceTracker(size_t dim) : dim_(dim) {}

  /// Returns true (and records the vector) if v is independent of the
  /// accepted set.
  bool add(std::vector<T> v) {
    for (size_t k = 0; k < basis_.size(); ++k) {
      const size_t p = pivot_[k];
      if (v[p].is_zero()) continue;
      const T f = v[p];
      for (size_t i = 0; i < dim_; ++i)
        if (!basis_[k][i].is_zero()) v[i] -= f * basis_[k][i];
    }
    std::optional<size_t> best;
    for (size_t i = 0; i < dim_; ++i)
      if (!v[i].is_zero() && (!best || v[i].complexity() < v[*best].complexity())) best = i;
    if (!best) return false;
    const T inv = v[*best].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    // Keep earlier vectors reduced at the new pivot.
    for (auto& b : basis_) {
      if (b[*best].is_zero()) continue;
      const T f = b[*best];
      for (size_t i = 0; i < dim_; ++i)
        if (!v[i].is_zero()) b[i] -= f * v[i];
    }
    basis_.push_back(std::move(v));
    pivot_.push_back(*best);
    return true;
  }
  size_t size() const { return basis_.size(); }

 private:
  size_t dim_;
  std::vector<std::vector<T>> basis_;
  std::vector<size_t> pivot_;
};

}  // namespace vtc
