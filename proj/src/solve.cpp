#include "ptrank/solve.hpp"

#include <algorithm>

namespace ptrank {

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& rhs) {
  if (a.rows() != a.cols()) throw Error("solve: matrix not square");
  if (a.rows() != rhs.rows()) throw Error("solve: rhs row mismatch");
  const int n = a.rows(), w = rhs.cols();

  // Gauss-Jordan on [A | RHS] with partial pivoting by numerator key.
  ExactMatrix m = hstack(a, rhs);
  for (int k = 0; k < n; ++k) {
    int pi = -1;
    BigInt best = 0;
    for (int i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      BigInt key = m(i, k).pivot_key();
      if (pi < 0 || key > best) {
        best = key;
        pi = i;
      }
    }
    if (pi < 0) return std::nullopt;  // singular
    if (pi != k)
      for (int j = 0; j < n + w; ++j) std::swap(m(k, j), m(pi, j));
    const GaussianRational inv = m(k, k).inverse();
    for (int j = k; j < n + w; ++j) m(k, j) = m(k, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      const GaussianRational f = m(i, k);
      for (int j = k; j < n + w; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return block(m, 0, n, n, w);
}

std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw Error("inverse: matrix not square");
  return solve(a, ExactMatrix::identity(a.rows()));
}

std::optional<ExactMatrix> row_space_coordinates(const ExactMatrix& basis, const ExactMatrix& v) {
  if (v.rows() != 1 || v.cols() != basis.cols())
    throw Error("row_space_coordinates: shape mismatch");
  const int k = basis.rows();
  RankCertificate cert = rank(basis);
  if (cert.rank != k) throw Error("row_space_coordinates: basis rows are dependent");

  // Restrict to k independent columns, solve there, then verify on the
  // full width (v may still fall outside the row space).
  std::vector<int> all_rows(k);
  for (int i = 0; i < k; ++i) all_rows[i] = i;
  ExactMatrix bp = submatrix(basis, all_rows, cert.pivot_cols);       // k x k
  ExactMatrix vp = submatrix(v, {0}, cert.pivot_cols);                // 1 x k
  // c * bp = vp  <=>  bp^T c^T = vp^T
  auto ct = solve(transpose(bp), transpose(vp));
  if (!ct) return std::nullopt;
  ExactMatrix c = transpose(*ct);
  if (c * basis != v) return std::nullopt;
  return c;
}

RankNormalForm rank_normal_form(const ExactMatrix& a) {
  const int nr = a.rows(), nc = a.cols();
  ExactMatrix w = a;
  ExactMatrix v = ExactMatrix::identity(nr);  // accumulates row ops
  ExactMatrix x = ExactMatrix::identity(nc);  // accumulates col ops
  int r = 0;

  for (int k = 0; k < std::min(nr, nc); ++k) {
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = k; i < nr; ++i)
      for (int j = k; j < nc; ++j) {
        if (w(i, j).is_zero()) continue;
        BigInt key = w(i, j).pivot_key();
        if (pi < 0 || key > best) {
          best = key;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;

    if (pi != k)
      for (int j = 0; j < nc; ++j) std::swap(w(k, j), w(pi, j));
    if (pi != k)
      for (int j = 0; j < nr; ++j) std::swap(v(k, j), v(pi, j));
    if (pj != k) {
      for (int i = 0; i < nr; ++i) std::swap(w(i, k), w(i, pj));
      for (int i = 0; i < nc; ++i) std::swap(x(i, k), x(i, pj));
    }

    const GaussianRational inv = w(k, k).inverse();
    for (int j = 0; j < nc; ++j) w(k, j) = w(k, j) * inv;
    for (int j = 0; j < nr; ++j) v(k, j) = v(k, j) * inv;

    // Clear the pivot column (row ops) and the pivot row (col ops).
    for (int i = 0; i < nr; ++i) {
      if (i == k || w(i, k).is_zero()) continue;
      const GaussianRational f = w(i, k);
      for (int j = 0; j < nc; ++j) w(i, j) = w(i, j) - f * w(k, j);
      for (int j = 0; j < nr; ++j) v(i, j) = v(i, j) - f * v(k, j);
    }
    for (int j = 0; j < nc; ++j) {
      if (j == k || w(k, j).is_zero()) continue;
      const GaussianRational f = w(k, j);
      for (int i = 0; i < nr; ++i) w(i, j) = w(i, j) - w(i, k) * f;
      for (int i = 0; i < nc; ++i) x(i, j) = x(i, j) - x(i, k) * f;
    }
    ++r;
  }
  return RankNormalForm{std::move(v), std::move(x), r};
}

}  // namespace ptrank
