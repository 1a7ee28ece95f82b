#ifndef PTRANK_MATRIX_HPP
#define PTRANK_MATRIX_HPP

#include <complex>
#include <utility>
#include <vector>

#include "ptrank/error.hpp"
#include "ptrank/scalar.hpp"

namespace ptrank {

/// Dense row-major matrix over a single scalar variant.
///
/// The scalar type is fixed at compile time (GaussianRational or
/// std::complex<double>), so exact and floating data can never mix
/// without an explicit conversion. Zero-dimension matrices are rejected
/// at construction.
template <typename T>
class Matrix {
 public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw Error("Matrix: dimensions must be positive");
    data_.resize(static_cast<std::size_t>(rows) * cols, T{});
  }

  Matrix(int rows, int cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw Error("Matrix: dimensions must be positive");
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
      throw Error("Matrix: entry count does not match dimensions");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = scalar_from_int<T>(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<T>& entries() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using FloatMatrix = Matrix<std::complex<double>>;

// ---------------------------------------------------------------------------
// Arithmetic

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("matrix add: dimension mismatch");
  Matrix<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("matrix sub: dimension mismatch");
  Matrix<T> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error("matrix mul: dimension mismatch");
  Matrix<T> r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (scalar_is_zero(a(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

template <typename T>
Matrix<T> scale(const Matrix<T>& m, const T& s) {
  Matrix<T> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

template <typename T>
Matrix<T> conjugate(const Matrix<T>& m) {
  Matrix<T> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = conjugate(m(i, j));
  return r;
}

/// Conjugate transpose.
template <typename T>
Matrix<T> hermitian_adjoint(const Matrix<T>& m) {
  Matrix<T> r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = conjugate(m(i, j));
  return r;
}

/// Kronecker product. Entry ((i*b.rows+p),(j*b.cols+q)) = a(i,j)*b(p,q).
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (scalar_is_zero(a(i, j))) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return r;
}

template <typename T>
T trace(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw Error("trace: matrix not square");
  T t{};
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <typename T>
bool is_zero(const Matrix<T>& m) {
  for (const T& x : m.entries())
    if (!scalar_is_zero(x)) return false;
  return true;
}

template <typename T>
bool is_hermitian(const Matrix<T>& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (m(i, j) != conjugate(m(j, i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Block helpers

template <typename T>
Matrix<T> block(const Matrix<T>& m, int r0, int c0, int h, int w) {
  if (h < 1 || w < 1 || r0 < 0 || c0 < 0 || r0 + h > m.rows() || c0 + w > m.cols())
    throw Error("block: out of range");
  Matrix<T> r(h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) r(i, j) = m(r0 + i, c0 + j);
  return r;
}

template <typename T>
void set_block(Matrix<T>& m, int r0, int c0, const Matrix<T>& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows() > m.rows() || c0 + b.cols() > m.cols())
    throw Error("set_block: out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw Error("hstack: row mismatch");
  Matrix<T> r(a.rows(), a.cols() + b.cols());
  set_block(r, 0, 0, a);
  set_block(r, 0, a.cols(), b);
  return r;
}

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw Error("vstack: column mismatch");
  Matrix<T> r(a.rows() + b.rows(), a.cols());
  set_block(r, 0, 0, a);
  set_block(r, a.rows(), 0, b);
  return r;
}

/// Submatrix picked by explicit row and column index lists.
template <typename T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  if (rows.empty() || cols.empty()) throw Error("submatrix: empty index set");
  Matrix<T> r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
  return r;
}

/// Row-major vectorization as a 1 x (rows*cols) matrix.
template <typename T>
Matrix<T> vec_row(const Matrix<T>& m) {
  Matrix<T> r(1, m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(0, i * m.cols() + j) = m(i, j);
  return r;
}

/// Inverse of vec_row.
template <typename T>
Matrix<T> unvec_row(const Matrix<T>& v, int rows, int cols) {
  if (v.rows() != 1 || v.cols() != rows * cols) throw Error("unvec_row: shape mismatch");
  Matrix<T> r(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(i, j) = v(0, i * cols + j);
  return r;
}

}  // namespace ptrank

#endif  // PTRANK_MATRIX_HPP
