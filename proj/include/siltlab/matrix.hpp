#pragma once
// Dense matrices over an exact field, with the elimination-based solvers the
// rest of the library leans on.  Vectors are columns: an r x c matrix is a map
// K^c -> K^r, and kernel/solve speak that convention.
//
// Everything here is desk-scale (dimensions in the tens), so plain Gaussian
// elimination over the exact field is the right tool; no pivoting heuristics
// beyond "first nonzero".

#include "siltlab/field.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace siltlab {

template <class K>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }
  Matrix(int rows, int cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("Matrix: entry count does not match shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& at(int i, int j) { return a_[index(i, j)]; }
  const K& at(int i, int j) const { return a_[index(i, j)]; }

  bool is_zero() const {
    for (const K& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "+");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "-");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("Matrix: product shape mismatch " + a.shape_string() + " * " +
                                  b.shape_string());
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  friend Matrix operator*(const K& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (a.a_[i] != b.a_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<K> apply(const std::vector<K>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw std::invalid_argument("Matrix: apply length mismatch");
    std::vector<K> y(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    return y;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("Matrix: hstack row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
  }
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("Matrix: vstack col mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
  }

  void set_block(int i0, int j0, const Matrix& m) {
    if (i0 < 0 || j0 < 0 || i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
      throw std::invalid_argument("Matrix: set_block out of range");
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
  }

  Matrix block(int i0, int j0, int r, int c) const {
    if (i0 < 0 || j0 < 0 || r < 0 || c < 0 || i0 + r > rows_ || j0 + c > cols_)
      throw std::invalid_argument("Matrix: block out of range");
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
  }

  static Matrix column(const std::vector<K>& v) {
    Matrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows_; ++i) m.at(i, 0) = v[i];
    return m;
  }

  std::vector<K> column_vector(int j) const {
    std::vector<K> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  // Row-major flattening, the convention every vectorized linear system uses.
  std::vector<K> flatten() const { return a_; }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      if (i) os << "; ";
      for (int j = 0; j < cols_; ++j) {
        if (j) os << " ";
        os << at(i, j).to_string();
      }
    }
    os << "]";
    return os.str();
  }

private:
  int rows_, cols_;
  std::vector<K> a_;

  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("Matrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside " + shape_string());
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("Matrix: shape mismatch for ") + op + ": " +
                                  shape_string() + " vs " + o.shape_string());
  }
};

template <class K>
std::ostream& operator<<(std::ostream& os, const Matrix<K>& m) {
  return os << m.to_string();
}

template <class K>
struct Rref {
  Matrix<K> mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

template <class K>
Rref<K> rref(Matrix<K> m) {
  Rref<K> out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    K inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      K f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

template <class K>
int rank(const Matrix<K>& m) {
  return rref(m).rank;
}

// Basis of {x : m x = 0}, one column vector per free column of the RREF.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  Rref<K> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols());
    v[free] = K(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.mat.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b, or nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& A, const std::vector<K>& b) {
  Matrix<K> aug = Matrix<K>::hstack(A, Matrix<K>::column(b));
  Rref<K> r = rref(aug);
  for (int c : r.pivot_cols)
    if (c == A.cols()) return std::nullopt;
  std::vector<K> x(A.cols());
  for (int i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.mat.at(i, A.cols());
  return x;
}

// One solution X of A X = B, or nullopt.
template <class K>
std::optional<Matrix<K>> solve_matrix(const Matrix<K>& A, const Matrix<K>& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_matrix: row mismatch");
  Matrix<K> aug = Matrix<K>::hstack(A, B);
  Rref<K> r = rref(aug);
  for (int c : r.pivot_cols)
    if (c >= A.cols()) return std::nullopt;
  Matrix<K> X(A.cols(), B.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < B.cols(); ++j) X.at(r.pivot_cols[i], j) = r.mat.at(i, A.cols() + j);
  return X;
}

// One solution X of X A = B, or nullopt.
template <class K>
std::optional<Matrix<K>> solve_matrix_left(const Matrix<K>& A, const Matrix<K>& B) {
  auto t = solve_matrix(A.transpose(), B.transpose());
  if (!t) return std::nullopt;
  return t->transpose();
}

template <class K>
K det(Matrix<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  int n = m.rows();
  K result(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m.at(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) return K(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      result = -result;
    }
    result = result * m.at(c, c);
    K inv = m.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      K f = inv * m.at(i, c);
      for (int j = c; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
    }
  }
  return result;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  Rref<K> r = rref(Matrix<K>::hstack(m, Matrix<K>::identity(m.rows())));
  if (r.rank != m.rows()) return std::nullopt;
  return r.mat.block(0, m.cols(), m.rows(), m.rows());
}

// Do the columns of `candidate` lie in the column span of `basis`?
template <class K>
bool columns_contained_in_span(const Matrix<K>& basis, const Matrix<K>& candidate) {
  if (basis.rows() != candidate.rows())
    throw std::invalid_argument("columns_contained_in_span: row mismatch");
  return static_cast<bool>(solve_matrix(basis, candidate));
}

}  // namespace siltlab
