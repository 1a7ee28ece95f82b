#ifndef PTRANK_RANK_HPP
#define PTRANK_RANK_HPP

#include <optional>
#include <vector>

#include "ptrank/matrix.hpp"

namespace ptrank {

enum class RankMethod { exact_elimination, svd_threshold };

/// Auditable rank result. `pivot_rows`/`pivot_cols` (each of length
/// `rank`, ascending) index a submatrix of the original input; for the
/// exact method that submatrix has nonzero determinant and can be
/// re-checked with `verify_certificate`.
struct RankCertificate {
  int rank = 0;
  std::vector<int> pivot_rows;
  std::vector<int> pivot_cols;
  RankMethod method = RankMethod::exact_elimination;
  double tolerance = 0.0;  // relative; 0 for the exact path
};

/// Certified rank by fraction-free (Bareiss) elimination with full
/// pivoting. Rows are pre-scaled to clear denominators, so the
/// elimination runs over Gaussian integers with exact divisions and the
/// pivot choice is the largest numerator magnitude, ties broken by
/// lowest (row, col).
RankCertificate rank(const ExactMatrix& m);

/// Numerical rank: singular values above rel_tol * sigma_max are
/// counted. rel_tol defaults to max(rows, cols) * machine epsilon.
/// Pivot witnesses come from a full-pivot LU at the same threshold.
RankCertificate rank(const FloatMatrix& m, std::optional<double> rel_tol = std::nullopt);

/// Re-checks an exact certificate: the pivot submatrix must be square of
/// size cert.rank with nonzero determinant.
bool verify_certificate(const ExactMatrix& m, const RankCertificate& cert);

/// Exact determinant (Bareiss, partial result sign-tracked through swaps).
GaussianRational determinant(const ExactMatrix& m);

inline int rank_of(const ExactMatrix& m) { return rank(m).rank; }
inline int rank_of(const FloatMatrix& m) { return rank(m).rank; }

}  // namespace ptrank

#endif  // PTRANK_RANK_HPP
