#include "ptrank/special.hpp"

namespace ptrank {

namespace {

ExactMatrix stack_vecs(const std::vector<ExactMatrix>& blocks) {
  ExactMatrix out(static_cast<int>(blocks.size()), blocks[0].rows() * blocks[0].cols());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    set_block(out, static_cast<int>(i), 0, vec_row(blocks[i]));
  return out;
}

int row_span_rank(const ExactBipartite& m, int i) {
  std::vector<ExactMatrix> blocks;
  for (int j = 0; j < m.n1; ++j) blocks.push_back(m.block(i, j));
  return rank_of(stack_vecs(blocks));
}

// Lexicographically first column subset whose blocks span the row space.
std::vector<int> greedy_independent_cols(const ExactBipartite& m, int i, int want) {
  std::vector<int> cols;
  std::vector<ExactMatrix> picked;
  for (int j = 0; j < m.n1 && static_cast<int>(cols.size()) < want; ++j) {
    std::vector<ExactMatrix> cand = picked;
    cand.push_back(m.block(i, j));
    if (rank_of(stack_vecs(cand)) == static_cast<int>(cand.size())) {
      picked = std::move(cand);
      cols.push_back(j);
    }
  }
  return cols;
}

}  // namespace

SpecialCaseTag detect_special_case(const ExactBipartite& m) {
  if (is_zero(m.data)) throw Error("detect_special_case: zero matrix");
  const int s = schmidt_rank(m);

  SpecialCaseTag tag;
  tag.schmidt_rank = s;
  if (s > m.n1) return tag;  // outside the hypothesis family

  std::vector<int> span(m.m1);
  for (int i = 0; i < m.m1; ++i) span[i] = row_span_rank(m, i);

  // (a) some row spans the whole S side
  for (int i = 0; i < m.m1; ++i) {
    if (span[i] == s) {
      tag.kind = SpecialCase::full_row;
      tag.row = i;
      tag.independent_cols = greedy_independent_cols(m, i, s);
      return tag;
    }
  }

  // (b) a row with exactly s-1 nonzero independent blocks, zeros
  // elsewhere, and an independent s-th block strictly below the zero
  // region.
  if (s >= 2) {
    for (int i = 0; i < m.m1; ++i) {
      std::vector<int> nz, zero_cols;
      for (int j = 0; j < m.n1; ++j)
        (is_zero(m.block(i, j)) ? zero_cols : nz).push_back(j);
      if (static_cast<int>(nz.size()) != s - 1 || span[i] != s - 1) continue;
      std::vector<ExactMatrix> anchor;
      for (int j : nz) anchor.push_back(m.block(i, j));
      for (int i2 = i + 1; i2 < m.m1; ++i2) {
        for (int j2 : zero_cols) {
          std::vector<ExactMatrix> cand = anchor;
          cand.push_back(m.block(i2, j2));
          if (rank_of(stack_vecs(cand)) == s) {
            tag.kind = SpecialCase::row_with_s_minus_1;
            tag.row = i;
            tag.independent_cols = nz;
            tag.extra_block = {i2, j2};
            return tag;
          }
        }
      }
    }
  }

  // (c) every row spans exactly one dimension
  bool all_single = true;
  for (int i = 0; i < m.m1; ++i)
    if (span[i] != 1) {
      all_single = false;
      break;
    }
  if (all_single) {
    tag.kind = SpecialCase::single_independent_per_row;
    for (int i = 0; i < m.m1; ++i)
      for (int j = 0; j < m.n1; ++j)
        if (!is_zero(m.block(i, j))) {
          tag.row_representatives.emplace_back(i, j);
          break;
        }
  }
  return tag;
}

bool verify_special_case_witness(const ExactBipartite& m, const SpecialCaseTag& tag) {
  const int s = tag.schmidt_rank;
  switch (tag.kind) {
    case SpecialCase::full_row: {
      if (tag.row < 0 || static_cast<int>(tag.independent_cols.size()) != s) return false;
      std::vector<ExactMatrix> blocks;
      for (int j : tag.independent_cols) blocks.push_back(m.block(tag.row, j));
      return rank_of(stack_vecs(blocks)) == s;
    }
    case SpecialCase::row_with_s_minus_1: {
      if (tag.row < 0 || static_cast<int>(tag.independent_cols.size()) != s - 1) return false;
      std::vector<ExactMatrix> blocks;
      for (int j = 0; j < m.n1; ++j) {
        bool claimed = false;
        for (int c : tag.independent_cols) claimed |= (c == j);
        if (claimed)
          blocks.push_back(m.block(tag.row, j));
        else if (!is_zero(m.block(tag.row, j)))
          return false;  // claimed-zero block is nonzero
      }
      if (rank_of(stack_vecs(blocks)) != s - 1) return false;
      auto [i2, j2] = tag.extra_block;
      if (i2 <= tag.row || j2 < 0) return false;
      for (int c : tag.independent_cols)
        if (c == j2) return false;  // must sit in the zero-column region
      blocks.push_back(m.block(i2, j2));
      return rank_of(stack_vecs(blocks)) == s;
    }
    case SpecialCase::single_independent_per_row: {
      if (static_cast<int>(tag.row_representatives.size()) != m.m1) return false;
      for (auto [i, j] : tag.row_representatives) {
        if (is_zero(m.block(i, j))) return false;
        std::vector<ExactMatrix> blocks;
        for (int jj = 0; jj < m.n1; ++jj) blocks.push_back(m.block(i, jj));
        if (rank_of(stack_vecs(blocks)) != 1) return false;
      }
      return true;
    }
    case SpecialCase::none:
      return false;
  }
  return false;
}

}  // namespace ptrank
