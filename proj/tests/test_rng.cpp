#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "logret/rng.hpp"

using namespace logret;

TEST_CASE("equal keys produce equal sequences") {
  CounterRng a(stream_key(42, kStreamQuery, 7));
  CounterRng b(stream_key(42, kStreamQuery, 7));
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct stream labels produce distinct keys") {
  std::set<std::uint64_t> keys;
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    for (std::uint64_t tag : {kStreamDailyVolume, kStreamEntry, kStreamQuery}) {
      for (std::uint64_t a = 0; a < 50; ++a) {
        for (std::uint64_t b = 0; b < 4; ++b) {
          keys.insert(stream_key(seed, tag, a, b));
        }
      }
    }
  }
  CHECK(keys.size() == 3u * 3u * 50u * 4u);
}

TEST_CASE("next_unit stays in [0, 1)") {
  CounterRng rng(stream_key(7, kStreamQuery, 0));
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("next_below respects the bound and is roughly uniform") {
  CounterRng rng(stream_key(9, kStreamQuery, 1));
  constexpr std::uint64_t kBound = 10;
  constexpr int kDraws = 100000;
  std::vector<int> counts(kBound, 0);
  for (int i = 0; i < kDraws; ++i) {
    const std::uint64_t v = rng.next_below(kBound);
    REQUIRE(v < kBound);
    ++counts[v];
  }
  // Expected 10000 per cell, sigma ~ 95; allow 5 sigma.
  for (int c : counts) {
    CHECK(c > 10000 - 500);
    CHECK(c < 10000 + 500);
  }
}

TEST_CASE("next_in_range covers both endpoints") {
  CounterRng rng(stream_key(11, kStreamDailyVolume, 2));
  bool saw_lo = false;
  bool saw_hi = false;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t v = rng.next_in_range(3, 10);
    REQUIRE(v >= 3);
    REQUIRE(v <= 10);
    saw_lo = saw_lo || v == 3;
    saw_hi = saw_hi || v == 10;
  }
  CHECK(saw_lo);
  CHECK(saw_hi);
}

TEST_CASE("next_below(1) is always zero") {
  CounterRng rng(stream_key(1, kStreamEntry, 0));
  for (int i = 0; i < 100; ++i) CHECK(rng.next_below(1) == 0);
}
