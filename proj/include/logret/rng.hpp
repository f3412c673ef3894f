#pragma once

#include <cstdint>

namespace logret {

// Deterministic random streams built on SplitMix64.
//
// Every randomized quantity in the simulator is drawn from a CounterRng
// stream whose key is derived from (root seed, stream labels) by chained
// applications of the SplitMix64 finalizer. Streams are independent of one
// another and of the order in which they are consumed, so per-day and
// per-query work can run on any thread schedule and still produce identical
// output. The generator family is part of the output contract: changing it
// changes every sampled workload.
//
// Stream label conventions (do not reuse tags for new draws):
//   stream_key(seed, kStreamDailyVolume, day)         daily entry count + byte jitter
//   stream_key(seed, kStreamEntry, day, ordinal)      one log entry's fields
//   stream_key(seed, kStreamQuery, ordinal)           one query's bucket + age

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t kStreamDailyVolume = 1;
inline constexpr std::uint64_t kStreamEntry = 2;
inline constexpr std::uint64_t kStreamQuery = 3;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t a,
                                   std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t k = mix64(seed + kSplitMixGamma);
  k = mix64(k ^ (a + kSplitMixGamma));
  k = mix64(k ^ (b + kSplitMixGamma));
  k = mix64(k ^ (c + kSplitMixGamma));
  return k;
}

class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) : state_(key) {}

  constexpr std::uint64_t next_u64() {
    state_ += kSplitMixGamma;
    return mix64(state_);
  }

  // Uniform double in [0, 1), 53-bit resolution.
  constexpr double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound). bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    // Lemire's multiply-shift rejection.
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform integer in [lo, hi], inclusive.
  std::uint64_t next_in_range(std::uint64_t lo, std::uint64_t hi) {
    return lo + next_below(hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

}  // namespace logret
