#ifndef PTRANK_TESTS_HELPERS_HPP
#define PTRANK_TESTS_HELPERS_HPP

#include <utility>
#include <vector>

#include "ptrank/bipartite.hpp"
#include "ptrank/random.hpp"
#include "ptrank/rng.hpp"
#include "ptrank/tripartite.hpp"

namespace ptrank::testing {

inline ExactMatrix mat(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = GaussianRational(rows[i][j]);
  return m;
}

// Entries as (re, im) integer pairs.
inline ExactMatrix cmat(const std::vector<std::vector<std::pair<long, long>>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) =
          GaussianRational(rows[i][j].first, rows[i][j].second);
  return m;
}

inline GaussianRational rat(long num, long den) {
  return GaussianRational(BigRat(num, den), BigRat(0));
}

// Bipartite matrix assembled from a grid of blocks.
inline ExactBipartite from_blocks(const std::vector<std::vector<ExactMatrix>>& grid) {
  const int m1 = static_cast<int>(grid.size());
  const int n1 = static_cast<int>(grid[0].size());
  const int m2 = grid[0][0].rows(), n2 = grid[0][0].cols();
  ExactMatrix data(m1 * m2, n1 * n2);
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < n1; ++j) set_block(data, i * m2, j * n2, grid[i][j]);
  return ExactBipartite(m1, n1, m2, n2, std::move(data));
}

// Random local equivalence with certified invertible factors.
inline ExactLocalEquivalence random_equivalence(int m1, int n1, int m2, int n2, SplitMix64& rng,
                                                int bound = 3) {
  return ExactLocalEquivalence{random_invertible(m1, rng, bound), random_invertible(m2, rng, bound),
                               random_invertible(n1, rng, bound),
                               random_invertible(n2, rng, bound)};
}

// Pure state rho = psi psi^dagger / <psi|psi> from a random integer vector.
inline ExactState random_pure_state(int dA, int dB, int dC, SplitMix64& rng, int bound = 3) {
  const int d = dA * dB * dC;
  for (;;) {
    ExactMatrix psi = random_matrix(d, 1, rng, bound);
    if (is_zero(psi)) continue;
    ExactMatrix g = psi * hermitian_adjoint(psi);
    GaussianRational tr = trace(g);
    return ExactState(dA, dB, dC, scale(g, tr.inverse()));
  }
}

// Engineered population for the rank-two screen case: a pure state on
// dA (x) 3 (x) 3 whose B and C marginals are compressed through random
// rank-2 injections, so r(rho_AB) = r(rho_AC) = 2 generically; instances
// are rejected until rho_BC is NPT and the ranks land exactly.
inline ExactState engineered_rank2_pair(std::uint64_t seed, int dA = 4) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    ExactMatrix phi = random_matrix(dA * 2 * 2, 1, rng, 3);
    ExactMatrix pb = random_matrix(3, 2, rng, 3);
    ExactMatrix pc = random_matrix(3, 2, rng, 3);
    if (rank_of(pb) != 2 || rank_of(pc) != 2) continue;
    ExactMatrix psi = kron(ExactMatrix::identity(dA), kron(pb, pc)) * phi;
    if (is_zero(psi)) continue;
    ExactMatrix g = psi * hermitian_adjoint(psi);
    GaussianRational tr = trace(g);
    ExactState s(dA, 3, 3, scale(g, tr.inverse()));
    RankTriple t = rank_triple(s);
    if (t.r_ab != 2 || t.r_ac != 2) continue;
    if (is_ppt(partial_trace(s, KeepPair::BC), 3, 3)) continue;
    return s;
  }
  throw Error("engineered_rank2_pair: attempt budget exhausted");
}

// Engineered population for the max(m, n) screen case: rank-2 states on
// 2 (x) 2 (x) 8 supported on V_AB (x) C^8 with dim V_AB = 2, so
// r(rho_AB) = 2 while r(rho_AC) = 4; the product hypothesis saturates on
// the ambient C dimension (2 * 4 = 8 = dC) and the rank bound
// r(rho_BC) <= max(m, n) is checked on the support dimensions (m = 2,
// n = 4). Rejected until NPT with all ranks exact.
inline ExactState engineered_maxmn(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int dA = 2, dB = 2, dC = 8;
  for (int attempt = 0; attempt < 256; ++attempt) {
    ExactMatrix f = random_matrix(dA * dB, 2, rng, 3);
    if (rank_of(f) != 2) continue;
    ExactMatrix u = random_matrix(2 * dC, 2, rng, 3);
    ExactMatrix w = kron(f, ExactMatrix::identity(dC)) * u;
    if (is_zero(w)) continue;
    ExactMatrix g = w * hermitian_adjoint(w);
    GaussianRational tr = trace(g);
    ExactState s(dA, dB, dC, scale(g, tr.inverse()));
    RankTriple t = rank_triple(s);
    if (t.r_ab != 2 || t.r_ac != 4) continue;
    const ExactMatrix rho_bc = partial_trace(s, KeepPair::BC);
    if (rank_of(trace_out_second(rho_bc, dB, dC)) != 2) continue;  // m = rank(rho_B)
    if (rank_of(trace_out_first(rho_bc, dB, dC)) != 4) continue;   // n = rank(rho_C)
    if (t.r_bc > 4) continue;
    if (is_ppt(rho_bc, dB, dC)) continue;
    return s;
  }
  throw Error("engineered_maxmn: attempt budget exhausted");
}

}  // namespace ptrank::testing

#endif  // PTRANK_TESTS_HELPERS_HPP
