#ifndef PTRANK_CONJECTURE_HPP
#define PTRANK_CONJECTURE_HPP

#include <optional>

#include "ptrank/bipartite.hpp"

namespace ptrank {

/// Outcome of testing r(M) <= K * r(M^Gamma_B) on one instance, with
/// every rank certified by exact elimination.
struct ConjectureVerdict {
  int schmidt_rank = 0;
  int rank_m = 0;
  int rank_m_gamma = 0;
  bool holds = false;        // rank_m <= schmidt_rank * rank_m_gamma
  BigRat ratio;              // rank_m / rank_m_gamma (gamma rank >= 1 for nonzero M)
  bool assumption_band = false;  // 2 < K < max(r, r_gamma) and K <= min(m1*n1, m2*n2)
};

ConjectureVerdict check_conjecture(const ExactBipartite& m);

/// When the Schmidt rank saturates min(m1*n1, m2*n2), the inequality
/// follows from the cheap chain K*r(M) >= grid * max block rank >=
/// r(M^Gamma). `swapped` marks that the chain ran on the factor-swapped
/// matrix (needed when the inner product space is the smaller one; the
/// swap is a permutation similarity that preserves every rank involved).
struct SaturatedRankCheck {
  bool verified = false;
  bool swapped = false;
  int max_block_rank = 0;
  long chain_bound = 0;  // grid size * max block rank, upper bound on r(M^Gamma)
  int rank_m = 0;
  int rank_gamma = 0;
  int schmidt_rank = 0;
};

/// Applies only when schmidt_rank(m) == min(m1*n1, m2*n2); returns
/// nullopt otherwise.
std::optional<SaturatedRankCheck> saturated_schmidt_rank_shortcut(const ExactBipartite& m);

/// Checks rank A + rank C <= rank [[A,0],[B,C]] <= rank [A;B] + rank C
/// with exact ranks. Requires B.rows == C.rows and B.cols == A.cols.
bool block_rank_inequalities(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c);

/// Swaps the tensor factors: sum R_i (x) S_i -> sum S_i (x) R_i. A
/// permutation similarity, so rank, Schmidt rank and partial-transpose
/// rank are all preserved.
ExactBipartite swap_factors(const ExactBipartite& m);

}  // namespace ptrank

#endif  // PTRANK_CONJECTURE_HPP
