// Line-stepping baseline. The walk keeps the exact residual
// E = y*den - x*num and advances one column per step, so its cost is the
// width of the start interval; the whole point of the comparison is that
// this width grows with i while the direct search's does not.

#include "cskew/bresenham.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace cskew {

CandidateBounds theoretical_bounds(FloatValue t, const FloatEnv& env) {
  if (!(t >= 0.0))
    throw std::invalid_argument("theoretical_bounds: t must be non-negative");
  const double u = env.unit_roundoff();
  const double lo_coeff =
      (1.0 - u + 2.0 * u * u) / ((1.0 + u) * (1.0 + u) * (1.0 + 2.0 * u));
  const double hi_coeff = (1.0 + 2.0 * u) * (1.0 + 2.0 * u) * (1.0 + 2.0 * u) *
                          (1.0 + u - 2.0 * u * u) / ((1.0 + u) * (1.0 + u));
  return {static_cast<Tick>(std::floor(t * lo_coeff)),
          static_cast<Tick>(std::ceil(t * hi_coeff))};
}

CandidateBounds fixed_epsilon_bounds(FloatValue t, double eps) {
  if (!(t >= 0.0) || !(eps >= 0.0))
    throw std::invalid_argument("fixed_epsilon_bounds: inputs must be non-negative");
  const double lo = std::floor(t - eps);
  const double hi = std::ceil(t + eps);
  return {lo < 0.0 ? 0 : static_cast<Tick>(lo),
          hi < 0.0 ? 0 : static_cast<Tick>(hi)};
}

namespace {

// Walk `steps` columns starting from (x0, y0) with residual e0, taking the
// nearer of y, y+1 at each next column; a tie keeps y. I is the residual
// accumulator type: int64 when the caller has bounded the magnitudes,
// int128 otherwise.
template <typename I>
Tick walk_line(Tick y0, int128 x0, int128 e0, std::uint64_t steps,
               std::uint32_t num, std::uint32_t den) {
  Tick y = y0;
  I e = static_cast<I>(e0);
  const I dec = num;
  const I den_i = den;
  for (std::uint64_t s = 0; s < steps; ++s) {
    const I stay = e - dec;  // residual of keeping y at column x+1
    if (2 * stay + den_i < 0) {
      y += 1;
      e = stay + den_i;
    } else {
      e = stay;
    }
  }
  assert(static_cast<int128>(e) ==
         static_cast<int128>(y) * den - (x0 + static_cast<int128>(steps)) * num);
  (void)x0;
  return y;
}

// Slope strictly below one: bracket fp(i*num/den), then step across the
// bracket's width.
BaselineOutcome walk_slope(Tick i, std::uint32_t num, std::uint32_t den,
                           const FloatEnv& env, const BoundsProvider& provider) {
  const FloatValue t = fp_ratio_scaled(i, RatioDA(num, den), env);
  const CandidateBounds b = provider.kind == BoundsProvider::Kind::theoretical
                                ? theoretical_bounds(t, env)
                                : fixed_epsilon_bounds(t, provider.epsilon);
  const std::uint64_t width = b.upper - b.lower;
  // Start column may sit left of zero when the bracket is wider than i;
  // the residual algebra is indifferent to that, so keep x signed.
  const int128 x0 = static_cast<int128>(i) - static_cast<int128>(width);
  const int128 e0 = static_cast<int128>(b.lower) * den - x0 * num;
  const int128 mag = (e0 < 0 ? -e0 : e0) + 2 * static_cast<int128>(den);
  const Tick y = mag < (static_cast<int128>(1) << 61)
                     ? walk_line<std::int64_t>(b.lower, x0, e0, width, num, den)
                     : walk_line<int128>(b.lower, x0, e0, width, num, den);
  return {y, width == 0 ? 1 : width};
}

}  // namespace

BaselineOutcome bresenham_compensate(Tick i, const RatioDA& r,
                                     const FloatEnv& env,
                                     const BoundsProvider& provider) {
  const std::uint64_t d = r.d;
  const std::uint64_t a = r.a;
  if (d >= 2 * a)
    throw std::invalid_argument("bresenham_compensate: requires d < 2a");
  if (d == a) return {i, 1};
  if (d < a) return walk_slope(i, r.d, r.a, env, provider);
  // Slope above one: split off the integer part, walk the fractional
  // remainder (d - a)/a, and shift the result back up by i.
  BaselineOutcome out =
      walk_slope(i, static_cast<std::uint32_t>(d - a), r.a, env, provider);
  out.j += i;
  return out;
}

}  // namespace cskew
