#pragma once

// Deterministic, platform-independent randomness. The standard <random>
// distributions are implementation-defined, so reports that must be
// byte-identical across toolchains use these instead.

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace gf2hd {

// 64-bit avalanche finalizer (splitmix64 / murmur3 style): every output bit
// depends on every input bit.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

// FNV-1a over a byte range; `h` allows chaining.
constexpr std::uint64_t fnv1a64(const void* data, std::size_t n,
                                std::uint64_t h = kFnvOffset) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // Uniform in [0, n); modulo bias is O(n / 2^64), negligible at the
  // desk-scale ranges used here.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  // Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (one value per call, pair cached).
  double next_gaussian() {
    if (has_cache_) {
      has_cache_ = false;
      return cache_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
    cache_ = radius * std::sin(angle);
    has_cache_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  double cache_ = 0.0;
  bool has_cache_ = false;
};

}  // namespace gf2hd
