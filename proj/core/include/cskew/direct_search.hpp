#pragma once

#include <cstdint>
#include <vector>

#include "cskew/float_env.hpp"
#include "cskew/types.hpp"

namespace cskew {

// Stopping rule that ended the search. Residual below means
// delta = k*A - i*D for the candidate k under consideration.
enum class TerminalCase {
  c1,          // delta == 0: k is exact
  c2_1,        // delta > 0 and delta - A == 0: k-1 is exact
  c2_3_left,   // delta > 0, delta - A < 0, |delta - A| < |delta|: take k-1
  c2_3_stay,   // delta > 0, delta - A < 0, otherwise: keep k
  c3_1,        // delta < 0 and delta + A == 0: k+1 is exact
  c3_2_right,  // delta < 0, delta + A > 0, |delta + A| < |delta|: take k+1
  c3_2_stay,   // delta < 0, delta + A > 0, otherwise: keep k
};

const char* to_string(TerminalCase c);

struct CompensationOutcome {
  Tick j = 0;
  std::uint64_t iterations = 0;  // top-level case dispatches entered, >= 1
  TerminalCase terminal_case = TerminalCase::c1;
};

// Candidate and its exact residual delta = k*A - i*D.
struct SearchState {
  Tick k = 0;
  int128 delta = 0;
};

// One entry per top-level dispatch; used by tests and the fuzzer to check
// loop progress and state consistency.
using SearchTrace = std::vector<SearchState>;

// Starting state: k = round-half-up of the environment's i*D/A, residual
// in the rearranged form (k - i)*A + i*(A - D), whose terms stay small
// when D/A is near one and which is evaluated exactly in 128 bits.
SearchState init_state(Tick i, const RatioDA& r, const FloatEnv& env);

// Integer-only search for argmin |k*A - i*D| from the float-seeded
// candidate. Walks candidates one step at a time, so the cost is the seed
// error plus one; with a sane seed that is a handful of iterations.
CompensationOutcome compensate(Tick i, const RatioDA& r, const FloatEnv& env);

// Same recursion from an arbitrary start; the traced overload records the
// state at every dispatch.
CompensationOutcome compensate_from(Tick i, const RatioDA& r, Tick k0);
CompensationOutcome compensate_from(Tick i, const RatioDA& r, Tick k0,
                                    SearchTrace& trace);

}  // namespace cskew
