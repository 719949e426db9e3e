#include "mip/arith.hpp"

#include <stdexcept>

namespace mip {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t ipow_checked(std::uint64_t base, int e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > limit / base)
      throw std::runtime_error("cap-exceeded: prime power does not fit the supported range");
    r *= base;
  }
  return r;
}

int exact_log(std::uint64_t n, std::uint64_t p) {
  int e = 0;
  while (n > 1) {
    if (p < 2 || n % p != 0)
      throw std::runtime_error("internal: value is not a power of the expected prime");
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return n ? next() % n : 0; }

}  // namespace mip
