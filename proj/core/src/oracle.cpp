#include "cskew/oracle.hpp"

namespace cskew {

ArgminResult exact_compensate(Tick i, const RatioDA& r) {
  const uint128 prod = static_cast<uint128>(i) * r.d;
  const Tick q = static_cast<Tick>(prod / r.a);
  const uint128 rem = prod % r.a;

  ArgminResult out;
  const uint128 twice = 2 * rem;
  if (twice < r.a) {
    out.lower = out.upper = out.canonical = q;
  } else if (twice == r.a) {
    // i*D/A is an exact half-integer: q and q+1 are equally close.
    out.lower = q;
    out.upper = q + 1;
    out.tie = true;
    out.canonical = q + 1;
  } else {
    out.lower = out.upper = out.canonical = q + 1;
  }
  return out;
}

}  // namespace cskew
