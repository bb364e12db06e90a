#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

namespace qvote {

// Deterministic randomness. Every stochastic routine in the library draws from
// a RandomStream, and experiment code derives one stream per (base seed, cell,
// trial) coordinate, so results never depend on thread count or scheduling.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// FNV-1a. Used to hash experiment cell identities into seed material; stable
// across runs and platforms.
inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("RandomStream::below: n must be positive");
    const std::uint64_t reject = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = bits();
      if (x >= reject) return x % n;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Stream for one (seed, cell, trial) coordinate. Trials can be partitioned
// across threads in any order without changing any draw.
inline RandomStream stream_for(std::uint64_t base_seed, std::uint64_t cell_hash,
                               std::uint64_t trial) {
  std::uint64_t s = splitmix64(base_seed);
  s = splitmix64(s ^ cell_hash);
  s = splitmix64(s ^ trial);
  return RandomStream(s);
}

}  // namespace qvote
