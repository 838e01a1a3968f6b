#pragma once

#include <cstdint>

namespace mindeg {

// Reproducible randomness. Every Monte Carlo trial draws from its own
// stream, fully determined by (seed, trial_index):
//
//   trial state  =  xoshiro256** initialized by SplitMix64 starting at
//                   seed XOR splitmix64(trial_index)
//
// so trial t produces identical draws no matter how trials are scheduled
// or partitioned across workers. Both generators are fixed published
// algorithms with bit-stable output across platforms.

// One SplitMix64 step: advances `state` and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256** 1.0.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    for (auto& word : state_) {
      word = splitmix64(seed);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased uniform draw from [0, bound) by modulo rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r = next();
    while (r < threshold) {
      r = next();
    }
    return r % bound;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

inline Xoshiro256 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
  std::uint64_t mix_state = trial_index;
  return Xoshiro256(seed ^ splitmix64(mix_state));
}

}  // namespace mindeg
