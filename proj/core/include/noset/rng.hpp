#pragma once

#include <cstdint>
#include <string_view>

namespace noset {

/// Algorithm identifier echoed in every report and output file.
inline constexpr std::string_view kRngAlgorithm = "splitmix64";

/// SplitMix64 stream. Deterministic across platforms, cheap to seed, and
/// well-behaved even for sequential seeds, which is what the retry loop of
/// the construction relies on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, n). Rejection on the top slice of the 64-bit range.
  std::uint64_t below(std::uint64_t n) {
    // 2^64 mod n; draws under this threshold would bias the modulus.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Independent child stream; advances this stream by one draw.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace noset
