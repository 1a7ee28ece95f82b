#include "ptrank/conjecture.hpp"

#include <algorithm>

namespace ptrank {

ConjectureVerdict check_conjecture(const ExactBipartite& m) {
  if (is_zero(m.data)) throw Error("check_conjecture: zero matrix");
  ConjectureVerdict v;
  v.schmidt_rank = schmidt_rank(m);
  v.rank_m = rank_of(m.data);
  v.rank_m_gamma = rank_of(partial_transpose(m, Side::B).data);
  v.holds = v.rank_m <= v.schmidt_rank * v.rank_m_gamma;
  v.ratio = BigRat(v.rank_m, v.rank_m_gamma);
  const int k = v.schmidt_rank;
  v.assumption_band = k > 2 && k < std::max(v.rank_m, v.rank_m_gamma) &&
                      k <= std::min(m.m1 * m.n1, m.m2 * m.n2);
  return v;
}

ExactBipartite swap_factors(const ExactBipartite& m) {
  Matrix<GaussianRational> out(m.m2 * m.m1, m.n2 * m.n1);
  // Entry ((i,p),(j,q)) of M moves to ((p,i),(q,j)).
  for (int i = 0; i < m.m1; ++i)
    for (int p = 0; p < m.m2; ++p)
      for (int j = 0; j < m.n1; ++j)
        for (int q = 0; q < m.n2; ++q)
          out(p * m.m1 + i, q * m.n1 + j) = m.data(i * m.m2 + p, j * m.n2 + q);
  return ExactBipartite(m.m2, m.n2, m.m1, m.n1, std::move(out));
}

std::optional<SaturatedRankCheck> saturated_schmidt_rank_shortcut(const ExactBipartite& m) {
  if (is_zero(m.data)) throw Error("saturated_schmidt_rank_shortcut: zero matrix");
  const int k = schmidt_rank(m);
  const int grid = m.m1 * m.n1, inner = m.m2 * m.n2;
  if (k != std::min(grid, inner)) return std::nullopt;

  SaturatedRankCheck c;
  c.schmidt_rank = k;
  c.rank_m = rank_of(m.data);
  c.rank_gamma = rank_of(partial_transpose(m, Side::B).data);

  // The chain needs the Schmidt rank to equal the outer grid size; when
  // the inner space is strictly smaller, run it on the swapped matrix,
  // whose grid size is exactly that minimum.
  const ExactBipartite* target = &m;
  ExactBipartite swapped = swap_factors(m);
  if (k != grid) {
    target = &swapped;
    c.swapped = true;
  }

  int max_block_rank = 0;
  for (int i = 0; i < target->m1; ++i)
    for (int j = 0; j < target->n1; ++j)
      max_block_rank = std::max(max_block_rank, rank_of(target->block(i, j)));
  c.max_block_rank = max_block_rank;
  c.chain_bound = static_cast<long>(target->m1) * target->n1 * max_block_rank;

  const int gamma_rank = rank_of(partial_transpose(*target, Side::B).data);
  // Chain: K*r(M) = grid*r(M) >= grid*k_blk >= r(M^Gamma). The swapped
  // matrix has the same r(M) and r(M^Gamma) as m itself.
  c.verified = gamma_rank == c.rank_gamma && c.rank_m >= max_block_rank &&
               c.chain_bound >= c.rank_gamma &&
               static_cast<long>(k) * c.rank_m >= c.rank_gamma;
  return c;
}

bool block_rank_inequalities(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
  if (b.rows() != c.rows() || b.cols() != a.cols())
    throw Error("block_rank_inequalities: block shapes not conformable");
  ExactMatrix zero(a.rows(), c.cols());
  ExactMatrix full = vstack(hstack(a, zero), hstack(b, c));
  const int r_full = rank_of(full);
  const int r_a = rank_of(a), r_c = rank_of(c);
  const int r_ab = rank_of(vstack(a, b));
  return r_a + r_c <= r_full && r_full <= r_ab + r_c;
}

}  // namespace ptrank
