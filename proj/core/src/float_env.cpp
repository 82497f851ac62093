// Compiled with -ffp-contract=off: each multiply and divide below must be
// one correctly rounded IEEE operation in the chosen width.

#include "cskew/float_env.hpp"

#include <cmath>
#include <stdexcept>

namespace cskew {

double FloatEnv::unit_roundoff() const {
  return std::ldexp(1.0, -precision_bits);
}

namespace {

template <typename T>
double eval_ratio_scaled(Tick i, const RatioDA& r, EvalOrder order) {
  const T fi = static_cast<T>(i);
  const T fd = static_cast<T>(r.d);
  const T fa = static_cast<T>(r.a);
  const T res = order == EvalOrder::mul_then_div ? (fi * fd) / fa
                                                 : fi * (fd / fa);
  return static_cast<double>(res);
}

}  // namespace

FloatValue fp_ratio_scaled(Tick i, const RatioDA& r, const FloatEnv& env) {
  switch (env.precision_bits) {
    case 24:
      return eval_ratio_scaled<float>(i, r, env.order);
    case 53:
      return eval_ratio_scaled<double>(i, r, env.order);
    default:
      throw std::invalid_argument("FloatEnv: precision_bits must be 24 or 53");
  }
}

Tick round_half_up(FloatValue x, const FloatEnv& env) {
  if (!(x >= 0.0))
    throw std::invalid_argument("round_half_up: input must be non-negative");
  double y;
  switch (env.precision_bits) {
    case 24:
      y = static_cast<double>(static_cast<float>(x) + 0.5f);
      break;
    case 53:
      y = x + 0.5;
      break;
    default:
      throw std::invalid_argument("FloatEnv: precision_bits must be 24 or 53");
  }
  return static_cast<Tick>(std::floor(y));
}

}  // namespace cskew
