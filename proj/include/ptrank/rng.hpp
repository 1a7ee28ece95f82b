#ifndef PTRANK_RNG_HPP
#define PTRANK_RNG_HPP

#include <cstdint>

namespace ptrank {

/// Seedable, splittable generator built on the SplitMix64 finalizer.
///
/// Reproducibility contract: the stream is a pure function of the seed,
/// and `split(i)` yields a child stream that is a pure function of
/// (seed, i). Scan shards derive one child per instance index, so report
/// content does not depend on worker scheduling. All bounded draws use
/// mask rejection, never std::uniform_int_distribution, keeping the byte
/// stream portable across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Independent child stream for the given index.
  SplitMix64 split(std::uint64_t stream) const {
    return SplitMix64(mix(state_ ^ mix(stream + 0x632BE59BD9B4E019ULL)));
  }

  /// Uniform in [0, n), n >= 1. Unbiased via bitmask rejection.
  std::uint64_t uniform(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll(n - 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < n) return v;
    }
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace ptrank

#endif  // PTRANK_RNG_HPP
