#pragma once

#include <cstdint>
#include <random>

namespace satroute {

/// Uniform integer in [lo, hi] from a 64-bit engine. Independent of the
/// standard library's distribution implementation, so seeded runs reproduce
/// across platforms.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

/// True with probability num/den.
inline bool bernoulli(std::mt19937_64& rng, std::int64_t num, std::int64_t den) {
  return uniform_int(rng, 0, den - 1) < num;
}

}  // namespace satroute
