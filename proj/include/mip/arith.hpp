#pragma once

#include <cstdint>

namespace mip {

bool is_prime(std::int64_t p);

// p^e, throwing "cap-exceeded" if the result would pass `limit`.
std::uint64_t ipow_checked(std::uint64_t base, int e,
                           std::uint64_t limit = (std::uint64_t{1} << 62));

// e with p^e == n; throws if n is not a power of p.
int exact_log(std::uint64_t n, std::uint64_t p);

// Deterministic PRNG for relabelings and sampled checks (splitmix64).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // uniform-ish in [0, n)
};

}  // namespace mip
