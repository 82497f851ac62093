#pragma once

#include <vector>

#include <cskew/oracle.hpp>
#include <cskew/types.hpp>

namespace cskew::testing {

// Independent nearest-integer search: scan every candidate in [k_lo, k_hi]
// and keep the ones with minimal |k*a - i*d|. Slow on purpose; tests use
// it on small windows or small quotients.
inline std::vector<Tick> brute_argmin(Tick i, const RatioDA& r, Tick k_lo,
                                      Tick k_hi) {
  std::vector<Tick> best;
  uint128 best_mag = ~uint128(0);
  for (Tick k = k_lo;; ++k) {
    const uint128 mag = abs_residual(k, i, r);
    if (mag < best_mag) {
      best_mag = mag;
      best.assign(1, k);
    } else if (mag == best_mag) {
      best.push_back(k);
    }
    if (k == k_hi) break;
  }
  return best;
}

// Full scan over every candidate that could possibly win: the residual
// grows monotonically past i*d/a, so 0 .. (i*d)/a + 2 suffices.
inline std::vector<Tick> brute_argmin_full(Tick i, const RatioDA& r) {
  const Tick hi =
      static_cast<Tick>(static_cast<uint128>(i) * r.d / r.a) + 2;
  return brute_argmin(i, r, 0, hi);
}

}  // namespace cskew::testing
