#ifndef PTRANK_SOLVE_HPP
#define PTRANK_SOLVE_HPP

#include <optional>

#include "ptrank/matrix.hpp"
#include "ptrank/rank.hpp"

namespace ptrank {

/// Solves A X = RHS exactly for square invertible A; nullopt if singular.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& rhs);

/// Exact inverse; nullopt if singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& a);

/// Coefficients c (1 x basis.rows()) with c * basis == v, when v lies in
/// the row space of `basis` (whose rows must be linearly independent);
/// nullopt otherwise. Exact.
std::optional<ExactMatrix> row_space_coordinates(const ExactMatrix& basis, const ExactMatrix& v);

/// Invertible row_ops (m x m) and col_ops (n x n) with
/// row_ops * A * col_ops = diag(I_rank, 0). Exact Gauss-Jordan with full
/// pivoting; deterministic.
struct RankNormalForm {
  ExactMatrix row_ops;
  ExactMatrix col_ops;
  int rank;
};
RankNormalForm rank_normal_form(const ExactMatrix& a);

}  // namespace ptrank

#endif  // PTRANK_SOLVE_HPP
