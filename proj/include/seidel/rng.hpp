#pragma once

#include <cstdint>

namespace seidel {

/// Algorithm identifier recorded in experiment output.
inline constexpr const char* kRngAlgorithm = "splitmix64";

/// SplitMix64: 64-bit state, one addition + finalizer per output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in 0..bound-1, bound >= 1, by rejection (no modulo bias).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return (x - threshold) % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// i-th output (0-based) of SplitMix64 seeded with `seed`, by direct jump.
/// Lets samples be indexed independently of thread partitioning.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
  return SplitMix64(seed + i * 0x9e3779b97f4a7c15ULL).next();
}

}  // namespace seidel
