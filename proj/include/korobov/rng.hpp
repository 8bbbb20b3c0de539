#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace korobov {

/// SplitMix64: counter-based 64-bit generator. Output k of a stream seeded
/// with s is mix(s + (k+1)*0x9E3779B97F4A7C15), so streams are reproducible
/// across platforms. Independent streams are obtained with derive_seed().
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; one variate per call, no cached state.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, n) by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t v = (*this)();
    while (v >= limit) v = (*this)();
    return v % n;
  }

 private:
  std::uint64_t state_;
};

// Seed of an independent sub-stream, e.g. per coefficient or per real part.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64::mix(seed ^ SplitMix64::mix(stream + 0x632BE59BD9B4E019ULL));
}

}  // namespace korobov
