#include "cskew/direct_search.hpp"

#include <cassert>

#include "cskew/oracle.hpp"

namespace cskew {

const char* to_string(TerminalCase c) {
  switch (c) {
    case TerminalCase::c1:         return "C1";
    case TerminalCase::c2_1:       return "C2.1";
    case TerminalCase::c2_3_left:  return "C2.3-left";
    case TerminalCase::c2_3_stay:  return "C2.3-stay";
    case TerminalCase::c3_1:       return "C3.1";
    case TerminalCase::c3_2_right: return "C3.2-right";
    case TerminalCase::c3_2_stay:  return "C3.2-stay";
  }
  return "?";
}

namespace {

SearchState make_state(Tick i, const RatioDA& r, Tick k) {
  const int128 diff = static_cast<int128>(k) - static_cast<int128>(i);
  const int128 drift = static_cast<int128>(r.a) - static_cast<int128>(r.d);
  const int128 delta = diff * r.a + static_cast<int128>(i) * drift;
  assert(delta == residual(k, i, r));
  return SearchState{k, delta};
}

CompensationOutcome run_search(Tick i, const RatioDA& r, Tick k0,
                               SearchTrace* trace) {
  SearchState s = make_state(i, r, k0);
  const int128 a = r.a;
  std::uint64_t n = 0;
  for (;;) {
    ++n;
    if (trace) trace->push_back(s);
    if (s.delta == 0) return {s.k, n, TerminalCase::c1};
    if (s.delta > 0) {
      const int128 down = s.delta - a;  // residual of k - 1
      if (down == 0) return {s.k - 1, n, TerminalCase::c2_1};
      if (down > 0) {  // still overshooting: step down and re-dispatch
        s.k -= 1;
        s.delta = down;
        continue;
      }
      if (-down < s.delta) return {s.k - 1, n, TerminalCase::c2_3_left};
      return {s.k, n, TerminalCase::c2_3_stay};
    }
    const int128 up = s.delta + a;  // residual of k + 1
    if (up == 0) return {s.k + 1, n, TerminalCase::c3_1};
    if (up > 0) {
      if (up < -s.delta) return {s.k + 1, n, TerminalCase::c3_2_right};
      return {s.k, n, TerminalCase::c3_2_stay};
    }
    // still undershooting: step up and re-dispatch
    s.k += 1;
    s.delta = up;
  }
}

}  // namespace

SearchState init_state(Tick i, const RatioDA& r, const FloatEnv& env) {
  return make_state(i, r, round_half_up(fp_ratio_scaled(i, r, env), env));
}

CompensationOutcome compensate(Tick i, const RatioDA& r, const FloatEnv& env) {
  return run_search(i, r, round_half_up(fp_ratio_scaled(i, r, env), env),
                    nullptr);
}

CompensationOutcome compensate_from(Tick i, const RatioDA& r, Tick k0) {
  return run_search(i, r, k0, nullptr);
}

CompensationOutcome compensate_from(Tick i, const RatioDA& r, Tick k0,
                                    SearchTrace& trace) {
  return run_search(i, r, k0, &trace);
}

}  // namespace cskew
