#include "ptrank/random.hpp"

#include "ptrank/rank.hpp"

namespace ptrank {

ExactMatrix random_matrix(int rows, int cols, SplitMix64& rng, int entry_bound) {
  if (entry_bound < 1) throw Error("random_matrix: entry_bound must be >= 1");
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long re = rng.uniform_int(-entry_bound, entry_bound);
      long im = rng.uniform_int(-entry_bound, entry_bound);
      m(i, j) = GaussianRational(re, im);
    }
  return m;
}

ExactMatrix random_matrix(int rows, int cols, std::uint64_t seed, int entry_bound) {
  SplitMix64 rng(seed);
  return random_matrix(rows, cols, rng, entry_bound);
}

ExactMatrix random_invertible(int n, SplitMix64& rng, int entry_bound, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ExactMatrix m = random_matrix(n, n, rng, entry_bound);
    if (rank_of(m) == n) return m;
  }
  throw Error("random_invertible: no full-rank draw within attempt budget");
}

}  // namespace ptrank
