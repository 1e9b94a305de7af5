#pragma once

#include <cstdint>

namespace alphar {

/// SplitMix64 finaliser.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Counter-based SplitMix64: word `counter` of the stream seeded with `seed`.
/// Word 0 equals the first output of the sequential generator, so the
/// reference vector (seed 1234567 -> 6457827717110365317, ...) applies.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64_mix(seed + (counter + 1) * kGoldenGamma);
}

/// Sub-seed of replicate `index` under a master seed.
constexpr std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64_at(master, index);
}

/// Sequential SplitMix64, usable with <random> distributions.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : seed_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  constexpr result_type operator()() { return splitmix64_at(seed_, counter_++); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace alphar
