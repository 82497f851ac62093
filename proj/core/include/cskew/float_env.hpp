#pragma once

#include "cskew/types.hpp"

namespace cskew {

enum class EvalOrder {
  mul_then_div,  // fl(fl(i * D) / A)
  div_then_mul,  // fl(i * fl(D / A))
};

// Floating-point evaluation environment: IEEE 754 binary32 (p = 24) or
// binary64 (p = 53), round-to-nearest-even, one rounding per operation
// (no FMA contraction, no extended intermediate precision).
struct FloatEnv {
  int precision_bits = 53;
  EvalOrder order = EvalOrder::mul_then_div;

  double unit_roundoff() const;  // 2^-p

  static FloatEnv binary32(EvalOrder order = EvalOrder::mul_then_div) {
    return FloatEnv{24, order};
  }
  static FloatEnv binary64(EvalOrder order = EvalOrder::mul_then_div) {
    return FloatEnv{53, order};
  }

  friend bool operator==(const FloatEnv&, const FloatEnv&) = default;
};

// A value exactly representable in the environment's format, widened to
// double for transport (exact for both supported formats).
using FloatValue = double;

// The environment's value of i*D/A: every conversion and arithmetic step
// is one correct rounding in the format, in the environment's order.
FloatValue fp_ratio_scaled(Tick i, const RatioDA& r, const FloatEnv& env);

// floor(fl(x + 0.5)) with the addition rounded in the environment's
// format. Note that for binary32 inputs >= 2^24 the 0.5 is absorbed and
// this degenerates to floor(x); that quirk is part of the behaviour being
// modelled, not a bug to paper over. Requires x >= 0 and a result that
// fits in a Tick.
Tick round_half_up(FloatValue x, const FloatEnv& env);

}  // namespace cskew
