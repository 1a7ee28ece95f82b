#ifndef PTRANK_CANONICAL_HPP
#define PTRANK_CANONICAL_HPP

#include "ptrank/bipartite.hpp"

namespace ptrank {

enum class CanonicalBranch { w_nonzero, w_zero };

/// Normal form of a 2x2-block Schmidt-rank-3 matrix under local
/// equivalence: block(0,0) = diag(I_k, 0), and block(1,1) equal to
/// block(0,0) (w != 0 branch, after column scaling) or zero (w = 0
/// branch). `certificate` maps the input to `n` exactly.
struct CanonicalForm {
  ExactBipartite n;
  int k = 0;
  GaussianRational w;
  CanonicalBranch branch = CanonicalBranch::w_zero;
  ExactLocalEquivalence certificate;
};

/// Reduces a 2x2-block Schmidt-rank-3 matrix to canonical form. If the
/// three leading blocks are dependent, a pre-pass permutes outer rows
/// and columns so that the lexicographically first independent block
/// triple occupies positions (0,0), (0,1), (1,0). Re-verifies that both
/// the output and its inner partial transpose have Schmidt rank 3.
CanonicalForm reduce_to_canonical(const ExactBipartite& m);

/// Block-rank bound sandwich extracted from the canonical form with
/// blocks zero-padded to square d x d, d = max(m2, n2):
///   r1 = rank [R12; R22], r2 = rank [R21 R22],
///   r3 = rank [Q12; Q22], r4 = rank [Q21 Q22]
/// with Q the (0,1) block, R the (1,0) block, split after row/col k.
/// Branch w != 0: lower = (r1+r2+r3+r4)/2 + k, upper = 2k + r1 + r3.
/// Branch w == 0: lower = k + r1 + r4,        upper = 3k + r1 + r4.
struct BlockRankBounds {
  int k = 0;
  int r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  BigRat lower_bound_rank_m;
  int upper_bound_rank_gamma = 0;
  CanonicalBranch branch = CanonicalBranch::w_zero;
  int rank_m = 0;        // certified rank of N (equals the input's rank)
  int rank_gamma_a = 0;  // certified rank of the outer-swap partial transpose
};

/// Computes the bounds and asserts lower <= rank_m, rank_gamma_a <=
/// upper and upper <= 3*lower. A violation throws BoundViolation with
/// the full instance attached; it would falsify the bound arithmetic.
BlockRankBounds verify_canonical_bounds(const CanonicalForm& c);

}  // namespace ptrank

#endif  // PTRANK_CANONICAL_HPP
