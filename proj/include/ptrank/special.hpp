#ifndef PTRANK_SPECIAL_HPP
#define PTRANK_SPECIAL_HPP

#include <utility>
#include <vector>

#include "ptrank/bipartite.hpp"

namespace ptrank {

enum class SpecialCase { full_row, single_independent_per_row, row_with_s_minus_1, none };

/// Witness data for a detected hypothesis. For `full_row`, `row` and
/// `independent_cols` (s columns) locate a block row spanning the whole
/// S-side space. For `row_with_s_minus_1`, the anchor row holds exactly
/// s-1 nonzero, independent blocks (`independent_cols`), the rest of the
/// row is zero, and `extra_block` is a block in a later row, inside the
/// zero-column region, independent of the anchor blocks. For
/// `single_independent_per_row`, every row's blocks span one dimension
/// and `row_representatives` lists one nonzero block per row.
struct SpecialCaseTag {
  SpecialCase kind = SpecialCase::none;
  int schmidt_rank = 0;
  int row = -1;
  std::vector<int> independent_cols;
  std::pair<int, int> extra_block{-1, -1};
  std::vector<std::pair<int, int>> row_representatives;
};

/// Scans block rows and returns the first matching hypothesis with
/// precedence full_row > row_with_s_minus_1 > single_independent_per_row.
/// Requires a nonzero matrix; layouts that match no hypothesis (including
/// s > n1) come back as `none`.
SpecialCaseTag detect_special_case(const ExactBipartite& m);

/// Re-verifies the witness: claimed independent blocks have
/// stacked-vectorization rank equal to the claimed count and claimed
/// zero blocks are zero.
bool verify_special_case_witness(const ExactBipartite& m, const SpecialCaseTag& tag);

}  // namespace ptrank

#endif  // PTRANK_SPECIAL_HPP
