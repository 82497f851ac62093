#pragma once

#include <cstdint>

namespace cskew {

// splitmix64: the 64-bit finalizer-based generator. Chosen because the
// n-th output is a pure function of (seed, n), which makes substream
// seeding and counter-style access trivial — every benchmark sample and
// fuzz trial is reproducible in isolation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  // The n-th value (0-based) of the stream started at `seed`, without
  // stepping any state: at(seed, n) == SplitMix64(seed) advanced n+1 times.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t n) {
    return mix(seed + (n + 1) * kGamma);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n] via the fixed-point multiply reduction.
  std::uint64_t next_below(std::uint64_t n_inclusive) {
    if (n_inclusive == ~0ull) return next();
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(next()) * (n_inclusive + 1);
    return static_cast<std::uint64_t>(wide >> 64);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace cskew
