#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace diffext {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Deterministic generator. Draw helpers are hand-rolled on top of the raw
// 64-bit stream because the standard distributions are not pinned down across
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), unbiased by rejection. n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - (~0ULL % n);
    for (;;) {
      std::uint64_t v = eng_();
      if (v < limit) return v % n;
    }
  }

  // Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

// Per-case stream: independent of case execution order and of every other
// case name, fully determined by (master seed, case name).
inline Rng case_rng(std::uint64_t master_seed, std::string_view case_name) {
  std::uint64_t state = master_seed ^ fnv1a64(case_name);
  (void)splitmix64(state);
  return Rng(splitmix64(state));
}

}  // namespace diffext
