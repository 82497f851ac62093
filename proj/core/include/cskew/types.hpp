#pragma once

#include <cstdint>
#include <stdexcept>

namespace cskew {

// Hardware/logical clock counter value. Kept within [0, 2^63 - 1] so the
// signed difference of any two ticks still fits in 64 bits.
using Tick = std::uint64_t;

using int128 = __int128;
using uint128 = unsigned __int128;

// Inverse frequency ratio D/A = 1/(1 + skew) as a pair of positive
// integers, e.g. the nominal and the measured counts of one calibration
// interval. Components are kept narrow so that cross products of a tick
// with a component always fit in 128 bits (and usually in 64).
struct RatioDA {
  std::uint32_t d = 1;
  std::uint32_t a = 1;

  RatioDA() = default;
  RatioDA(std::uint32_t d_, std::uint32_t a_) : d(d_), a(a_) {
    if (d == 0 || a == 0)
      throw std::invalid_argument("RatioDA: d and a must be >= 1");
  }

  friend bool operator==(const RatioDA&, const RatioDA&) = default;
};

// The set of non-negative integers k minimizing |k*A - i*D|. Either a
// single value (lower == upper) or two adjacent ones when i*D/A is an
// exact half-integer; `canonical` resolves the tie by rounding half up.
struct ArgminResult {
  Tick lower = 0;
  Tick upper = 0;
  bool tie = false;
  Tick canonical = 0;
};

// State captured at a synchronization point: raw clock reading, logical
// clock value handed out at that instant, and the ratio estimated for the
// interval ahead.
struct SyncEpoch {
  Tick hw_at_sync = 0;
  Tick logical_at_sync = 0;
  RatioDA ratio{};
};

}  // namespace cskew
