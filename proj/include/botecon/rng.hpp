#pragma once

#include <cmath>
#include <cstdint>

namespace botecon {

/// Small, fast, splittable PRNG (splitmix64). Chosen over <random> engines so
/// that streams are bit-identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// True with probability p. Exact for p = 0 and p = 1.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Exponential variate with the given mean.
  double exponential(double mean) { return -mean * std::log1p(-uniform01()); }

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed from (master, index). Each trial's
/// stream depends only on its own index, so parallel and serial runs agree.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 mix(master ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return mix.next();
}

}  // namespace botecon
