#pragma once

#include <cstdint>
#include <random>

namespace spansub {

// splitmix64 step; used to derive independent stream seeds from (seed, salt).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Unbiased uniform draw from [0, bound); deterministic across platforms,
// unlike std::uniform_int_distribution.
inline int uniform_below(std::mt19937_64& rng, int bound) {
  if (bound <= 1) return 0;
  std::uint64_t b = static_cast<std::uint64_t>(bound);
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b + 1) % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return static_cast<int>(x % b);
}

template <typename T>
void shuffle_inplace(std::mt19937_64& rng, std::vector<T>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    int j = uniform_below(rng, i + 1);
    std::swap(v[i], v[j]);
  }
}

}  // namespace spansub
