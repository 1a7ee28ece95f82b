#include "ptrank/rank.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ptrank {

namespace {

// Multiplies each row by the LCM of its entry denominators. Rank and
// pivot structure are unchanged; all entries become Gaussian integers so
// the Bareiss recurrence divides exactly and numerators stay bounded by
// minor growth.
ExactMatrix clear_denominators(const ExactMatrix& m) {
  ExactMatrix r = m;
  for (int i = 0; i < r.rows(); ++i) {
    BigInt l = 1;
    for (int j = 0; j < r.cols(); ++j) {
      l = lcm(l, denominator(r(i, j).real()));
      l = lcm(l, denominator(r(i, j).imag()));
    }
    if (l != 1) {
      GaussianRational s{BigRat(l), BigRat(0)};
      for (int j = 0; j < r.cols(); ++j) r(i, j) = r(i, j) * s;
    }
  }
  return r;
}

struct Elimination {
  int rank = 0;
  std::vector<int> row_perm;  // position -> original row index
  std::vector<int> col_perm;
};

// Fraction-free Gaussian elimination with full pivoting on the largest
// numerator magnitude; ties broken by lowest (row, col) in the permuted
// frame, which is deterministic for a fixed input.
Elimination bareiss(ExactMatrix a) {
  const int nr = a.rows(), nc = a.cols();
  Elimination e;
  e.row_perm.resize(nr);
  e.col_perm.resize(nc);
  std::iota(e.row_perm.begin(), e.row_perm.end(), 0);
  std::iota(e.col_perm.begin(), e.col_perm.end(), 0);

  GaussianRational prev(1);
  const int steps = std::min(nr, nc);
  for (int k = 0; k < steps; ++k) {
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = k; i < nr; ++i)
      for (int j = k; j < nc; ++j) {
        if (a(i, j).is_zero()) continue;
        BigInt key = a(i, j).pivot_key();
        if (pi < 0 || key > best) {
          best = key;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining submatrix is zero

    if (pi != k) {
      for (int j = 0; j < nc; ++j) std::swap(a(k, j), a(pi, j));
      std::swap(e.row_perm[k], e.row_perm[pi]);
    }
    if (pj != k) {
      for (int i = 0; i < nr; ++i) std::swap(a(i, k), a(i, pj));
      std::swap(e.col_perm[k], e.col_perm[pj]);
    }

    const GaussianRational pivot = a(k, k);
    for (int i = k + 1; i < nr; ++i) {
      for (int j = k + 1; j < nc; ++j) {
        a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = GaussianRational(0);
    }
    prev = pivot;
    ++e.rank;
  }
  return e;
}

}  // namespace

RankCertificate rank(const ExactMatrix& m) {
  Elimination e = bareiss(clear_denominators(m));
  RankCertificate cert;
  cert.rank = e.rank;
  cert.method = RankMethod::exact_elimination;
  cert.tolerance = 0.0;
  cert.pivot_rows.assign(e.row_perm.begin(), e.row_perm.begin() + e.rank);
  cert.pivot_cols.assign(e.col_perm.begin(), e.col_perm.begin() + e.rank);
  std::sort(cert.pivot_rows.begin(), cert.pivot_rows.end());
  std::sort(cert.pivot_cols.begin(), cert.pivot_cols.end());
  return cert;
}

RankCertificate rank(const FloatMatrix& m, std::optional<double> rel_tol) {
  Eigen::MatrixXcd em(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) em(i, j) = m(i, j);

  const double tol = rel_tol.value_or(static_cast<double>(std::max(m.rows(), m.cols())) *
                                      std::numeric_limits<double>::epsilon());
  if (tol < 0) throw Error("rank: tolerance must be nonnegative");

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(em);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sigma_max) ++r;
  if (sigma_max == 0.0) r = 0;

  RankCertificate cert;
  cert.rank = r;
  cert.method = RankMethod::svd_threshold;
  cert.tolerance = tol;

  // Pivot witnesses from a complete-pivot elimination, truncated to the
  // SVD rank. The witnesses are best-effort on the float path; only the
  // exact method promises a re-checkable certificate.
  Eigen::MatrixXcd a = em;
  std::vector<int> row_perm(m.rows()), col_perm(m.cols());
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  const int steps = std::min({m.rows(), m.cols(), r});
  for (int k = 0; k < steps; ++k) {
    int pi = k, pj = k;
    double best = -1.0;
    for (int i = k; i < m.rows(); ++i)
      for (int j = k; j < m.cols(); ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pi = i;
          pj = j;
        }
    if (best <= 0.0) break;
    a.row(k).swap(a.row(pi));
    a.col(k).swap(a.col(pj));
    std::swap(row_perm[k], row_perm[pi]);
    std::swap(col_perm[k], col_perm[pj]);
    for (int i = k + 1; i < m.rows(); ++i) {
      const std::complex<double> f = a(i, k) / a(k, k);
      for (int j = k; j < m.cols(); ++j) a(i, j) -= f * a(k, j);
    }
    cert.pivot_rows.push_back(row_perm[k]);
    cert.pivot_cols.push_back(col_perm[k]);
  }
  std::sort(cert.pivot_rows.begin(), cert.pivot_rows.end());
  std::sort(cert.pivot_cols.begin(), cert.pivot_cols.end());
  return cert;
}

bool verify_certificate(const ExactMatrix& m, const RankCertificate& cert) {
  if (cert.method != RankMethod::exact_elimination) return false;
  if (static_cast<int>(cert.pivot_rows.size()) != cert.rank ||
      static_cast<int>(cert.pivot_cols.size()) != cert.rank)
    return false;
  if (cert.rank == 0) return is_zero(m);
  ExactMatrix sub = submatrix(m, cert.pivot_rows, cert.pivot_cols);
  return !determinant(sub).is_zero();
}

GaussianRational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  // Bareiss on the raw (possibly rational) entries: the recurrence is
  // exact over the rationals, and the final pivot is det up to the swap
  // sign. No denominator clearing here so the value is the true det.
  ExactMatrix a = m;
  const int n = a.rows();
  GaussianRational prev(1);
  int parity = 0;
  for (int k = 0; k < n; ++k) {
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        if (a(i, j).is_zero()) continue;
        BigInt key = a(i, j).pivot_key();
        if (pi < 0 || key > best) {
          best = key;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) return GaussianRational(0);
    if (pi != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pi, j));
      ++parity;
    }
    if (pj != k) {
      for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, pj));
      ++parity;
    }
    const GaussianRational pivot = a(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
      a(i, k) = GaussianRational(0);
    }
    prev = pivot;
  }
  GaussianRational det = a(n - 1, n - 1);
  return (parity % 2 == 0) ? det : -det;
}

}  // namespace ptrank
