#pragma once

#include <cstdint>

namespace qgrid {

/// Deterministic uniform random source.
///
/// Backed by the SplitMix64 recurrence (Steele, Lea & Flood, "Fast splittable
/// pseudorandom number generators", 2014), implemented here directly so that
/// output is a pure function of the seed and bit-identical across platforms
/// and standard libraries. Not suitable for cryptography.
///
/// A RandomSource is single-owner: one source per training run, never shared
/// between concurrently executing runs.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) noexcept : state_(seed), seed_(seed) {}

  /// Next raw 64-bit word of the stream.
  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), using the top 53 bits of one word.
  double unit_float() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in {0, ..., n-1}. Unbiased: draws outside the largest
  /// multiple of n below 2^64 are rejected instead of folded by modulo.
  /// Throws std::invalid_argument when n == 0.
  std::uint64_t int_below(std::uint64_t n);

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

}  // namespace qgrid
