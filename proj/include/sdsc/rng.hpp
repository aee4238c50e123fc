#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sdsc {

/// Seeded random source with a fixed, documented derivation for every draw.
///
/// The raw stream is std::mt19937_64, whose output sequence is pinned by the
/// C++ standard, so identical seeds give identical u64 streams on every
/// platform. Derived draws (uniform01, normal, uniform_index) are built from
/// raw u64 words with the explicit formulas below rather than through
/// std::*_distribution, which the standard leaves implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1): top 53 bits of one u64 word.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Unbiased index in [0, n) by rejection sampling; n must be positive.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return static_cast<std::size_t>(x % n);
  }

  /// Standard normal via Box-Muller (cosine branch); consumes two u64 words.
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Independent child stream: reseeds with splitmix64(seed ^ mix(id)).
  SeededRng substream(std::uint64_t stream_id) const {
    return SeededRng(splitmix64(seed_ ^ splitmix64(stream_id + 1)));
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace sdsc
