#pragma once

#include <cstdint>
#include <random>

namespace umc {

/// Seedable generator with platform-independent output. The engine is
/// std::mt19937_64, whose sequence is fixed by the standard; the conversions
/// below avoid the standard distributions, whose algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = engine_();
      if (x >= limit) return x % bound;
    }
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Child seed for an independent stream (shards, per-cell runs).
  std::uint64_t derive(std::uint64_t stream) const {
    std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace umc
