#ifndef PTRANK_RANDOM_HPP
#define PTRANK_RANDOM_HPP

#include <cstdint>

#include "ptrank/matrix.hpp"
#include "ptrank/rng.hpp"

namespace ptrank {

/// Exact matrix with real and imaginary parts drawn uniformly from the
/// integers in [-entry_bound, entry_bound]. Deterministic in the stream:
/// entries are drawn row-major, real part before imaginary part.
ExactMatrix random_matrix(int rows, int cols, SplitMix64& rng, int entry_bound);

/// Seed-based wrapper (the stream is consumed from a fresh generator).
ExactMatrix random_matrix(int rows, int cols, std::uint64_t seed, int entry_bound);

/// Random integer matrix regenerated until it has full rank.
/// Throws after `max_attempts` misses.
ExactMatrix random_invertible(int n, SplitMix64& rng, int entry_bound, int max_attempts = 64);

}  // namespace ptrank

#endif  // PTRANK_RANDOM_HPP
