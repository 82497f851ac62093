#pragma once

#include <concepts>

#include "cskew/types.hpp"

namespace cskew {

// Exact signed residual k*A - i*D in 128-bit arithmetic.
inline int128 residual(Tick k, Tick i, const RatioDA& r) {
  return static_cast<int128>(k) * r.a - static_cast<int128>(i) * r.d;
}

inline uint128 abs_residual(Tick k, Tick i, const RatioDA& r) {
  const int128 d = residual(k, i, r);
  return d < 0 ? static_cast<uint128>(-d) : static_cast<uint128>(d);
}

// Exact skew-compensated clock value: argmin |k*A - i*D| over k >= 0,
// computed with one 128-bit division and explicit midpoint handling.
// Total for every valid (i, ratio); never loses precision.
ArgminResult exact_compensate(Tick i, const RatioDA& r);

// Logical clock update: value at the last sync plus the compensated raw
// increment. The compensator maps (increment, ratio) -> ticks; pass the
// exact oracle, the direct search, or a baseline.
template <typename F>
  requires std::invocable<F&, Tick, const RatioDA&>
Tick advance_logical_clock(const SyncEpoch& epoch, Tick hw_now, F&& compensate) {
  if (hw_now < epoch.hw_at_sync)
    throw std::invalid_argument("advance_logical_clock: raw clock moved backwards");
  return epoch.logical_at_sync + compensate(hw_now - epoch.hw_at_sync, epoch.ratio);
}

}  // namespace cskew
