#pragma once

#include <cstdint>

namespace moufang {

/// splitmix64. Fixed, platform-independent stream so that seeded sampling
/// and fixture generation are reproducible everywhere.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) by rejection, bias-free.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

private:
  std::uint64_t state_;
};

} // namespace moufang
