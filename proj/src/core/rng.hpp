#pragma once

#include <cstdint>
#include <random>

namespace nonrep {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; identical on every platform.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

/// Independent stream derived from a seed and a tag (splitmix64 mixing).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class It>
void shuffle_range(It first, It last, Rng& rng) {
  for (auto n = last - first; n > 1; --n) {
    auto k = static_cast<decltype(n)>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::swap(first[n - 1], first[k]);
  }
}

}  // namespace nonrep
