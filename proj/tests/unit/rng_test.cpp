#include <cskew/rng.hpp>

#include <initializer_list>

#include <doctest.h>

using cskew::SplitMix64;

TEST_CASE("splitmix64 reference vectors") {
  // Frozen from the published reference implementation.
  {
    SplitMix64 g(0);
    CHECK(g.next() == 0xe220a8397b1dcdafull);
    CHECK(g.next() == 0x6e789e6aa1b965f4ull);
    CHECK(g.next() == 0x06c45d188009454full);
    CHECK(g.next() == 0xf88bb8a8724c81ecull);
  }
  {
    SplitMix64 g(42);
    CHECK(g.next() == 0xbdd732262feb6e95ull);
    CHECK(g.next() == 0x28efe333b266f103ull);
    CHECK(g.next() == 0x47526757130f9f52ull);
    CHECK(g.next() == 0x581ce1ff0e4ae394ull);
  }
  {
    SplitMix64 g(1234567);
    CHECK(g.next() == 0x599ed017fb08fc85ull);
    CHECK(g.next() == 0x2c73f08458540fa5ull);
    CHECK(g.next() == 0x883ebce5a3f27c77ull);
    CHECK(g.next() == 0x3fbef740e9177b3full);
  }
}

TEST_CASE("counter access equals sequential stream") {
  for (std::uint64_t seed : {0ull, 42ull, 7ull, 0xDEADBEEFull}) {
    SplitMix64 g(seed);
    for (std::uint64_t n = 0; n < 64; ++n) {
      CHECK(SplitMix64::at(seed, n) == g.next());
    }
  }
}

TEST_CASE("unit doubles stay in [0, 1)") {
  SplitMix64 g(99);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const double u = g.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = u < lo ? u : lo;
    hi = u > hi ? u : hi;
    sum += u;
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("bounded draws cover the whole range uniformly") {
  SplitMix64 g(5);
  bool seen[10] = {};
  double sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t v = g.next_below(9);
    REQUIRE(v <= 9);
    seen[v] = true;
    sum += static_cast<double>(v);
  }
  for (bool s : seen) CHECK(s);
  CHECK(sum / n == doctest::Approx(4.5).epsilon(0.02));

  CHECK(g.next_below(0) == 0);
}
