#pragma once

#include <cstdint>
#include <random>

namespace slgen {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent per-trial streams.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of trial `index` in a run seeded with `seed`. Depends only on the
/// pair, so trials can be evaluated in any order or concurrently.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ mix64(index + 0x5851f42d4c957f2dULL));
}

inline Rng trial_rng(std::uint64_t seed, std::uint64_t index) { return Rng{trial_seed(seed, index)}; }

/// Unbiased integer in [0, bound). std::uniform_int_distribution is not
/// specified bit-for-bit across standard libraries, this is.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

}  // namespace slgen
