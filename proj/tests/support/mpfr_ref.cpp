#include "support/mpfr_ref.hpp"

#include <mpfr.h>

namespace cskew::testing {

double mpfr_fp_ratio_scaled(Tick i, const RatioDA& r, const FloatEnv& env) {
  const mpfr_prec_t p = env.precision_bits;
  mpfr_t fi, fd, fa, acc;
  mpfr_inits2(p, fi, fd, fa, acc, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_uj(fi, i, MPFR_RNDN);        // rounded conversion, like the cast
  mpfr_set_uj(fd, r.d, MPFR_RNDN);
  mpfr_set_uj(fa, r.a, MPFR_RNDN);
  if (env.order == EvalOrder::mul_then_div) {
    mpfr_mul(acc, fi, fd, MPFR_RNDN);
    mpfr_div(acc, acc, fa, MPFR_RNDN);
  } else {
    mpfr_div(acc, fd, fa, MPFR_RNDN);
    mpfr_mul(acc, fi, acc, MPFR_RNDN);
  }
  // Exact: acc has at most 53 significant bits and binary32/64 exponent
  // ranges are nowhere near these magnitudes.
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(fi, fd, fa, acc, static_cast<mpfr_ptr>(nullptr));
  return out;
}

Tick mpfr_round_half_up(double x, const FloatEnv& env) {
  const mpfr_prec_t p = env.precision_bits;
  mpfr_t acc;
  mpfr_init2(acc, p);
  mpfr_set_d(acc, x, MPFR_RNDN);  // exact when x is an env value
  mpfr_add_d(acc, acc, 0.5, MPFR_RNDN);
  mpfr_floor(acc, acc);
  const Tick out = static_cast<Tick>(mpfr_get_uj(acc, MPFR_RNDZ));
  mpfr_clear(acc);
  return out;
}

}  // namespace cskew::testing
