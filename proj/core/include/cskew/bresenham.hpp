#pragma once

#include <cstdint>

#include "cskew/float_env.hpp"
#include "cskew/types.hpp"

namespace cskew {

// Closed candidate interval [lower, upper] for the compensated clock;
// must contain the exact value of the line in effect.
struct CandidateBounds {
  Tick lower = 0;
  Tick upper = 0;
};

// How the line-stepping baseline brackets its start interval.
struct BoundsProvider {
  enum class Kind {
    theoretical,    // precision-loss bound derived from the unit roundoff
    fixed_epsilon,  // ad-hoc symmetric widening by a caller-chosen eps
  };

  Kind kind = Kind::theoretical;
  double epsilon = 0.0;

  static BoundsProvider theoretical() { return {Kind::theoretical, 0.0}; }
  static BoundsProvider fixed_epsilon(double eps) {
    return {Kind::fixed_epsilon, eps};
  }
};

// Worst-case rounding bracket around the platform value t = fp(i*D/A),
// with u the environment's unit roundoff:
//
//   lower = floor(t * (1 - u + 2u^2) / ((1+u)^2 (1+2u)))
//   upper = ceil (t * (1+2u)^3 (1 + u - 2u^2) / (1+u)^2)
//
// The coefficients and the products are evaluated in binary64. For any t
// produced by a multiply and a divide (in either order) in the
// environment, [lower, upper] contains the exact i*D/A.
CandidateBounds theoretical_bounds(FloatValue t, const FloatEnv& env);

// floor(t - eps) and ceil(t + eps), clamped at zero. No containment
// guarantee: too small an eps misses the exact value, too large a one
// inflates the work. Kept as the point of comparison for the bound above.
CandidateBounds fixed_epsilon_bounds(FloatValue t, double eps);

struct BaselineOutcome {
  Tick j = 0;
  // Interval width upper - lower = number of line steps taken; a width of
  // zero (and the no-step D == A shortcut) reports 1.
  std::uint64_t iterations = 0;
};

// Line-stepping baseline: bracket the candidate with the provider, then
// walk the line y = x * num/den across columns i-l .. i keeping the exact
// residual E = y*den - x*num, taking whichever of y, y+1 is nearer at
// each column (ties keep y). A ratio with D > A has slope >= 1 and is
// first decomposed as j = i + walk(i, (D-A)/A), so D < 2A is required;
// D == A short-circuits to j = i.
BaselineOutcome bresenham_compensate(Tick i, const RatioDA& r,
                                     const FloatEnv& env,
                                     const BoundsProvider& provider);

}  // namespace cskew
