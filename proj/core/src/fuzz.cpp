// Differential fuzzer. Every property here is checked against exact
// 128-bit integer arithmetic; the float code under test never gets to
// grade its own homework.

#include "cskew/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cskew/bresenham.hpp"
#include "cskew/oracle.hpp"
#include "cskew/rng.hpp"

namespace cskew {

namespace {

std::string i128_str(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  uint128 m = neg ? static_cast<uint128>(-v) : static_cast<uint128>(v);
  std::string s;
  while (m != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

struct TrialContext {
  const FuzzConfig* cfg = nullptr;
  std::uint64_t trial = 0;
  Tick i = 0;
  RatioDA r{};
  std::uint64_t checks = 0;
  std::optional<Counterexample> failure;

  // Records the first failure of the trial; later checks still run but
  // cannot overwrite it.
  bool expect(bool ok, const char* check, std::string detail) {
    ++checks;
    if (!ok && !failure) {
      failure = Counterexample{trial, i, r.d, r.a, check, std::move(detail)};
    }
    return ok;
  }
};

void check_oracle(TrialContext& t, const ArgminResult& oracle) {
  const Tick i = t.i;
  const RatioDA& r = t.r;

  t.expect(oracle.upper == oracle.lower || oracle.upper == oracle.lower + 1,
           "oracle-adjacent",
           "lower=" + std::to_string(oracle.lower) +
               " upper=" + std::to_string(oracle.upper));

  // Both candidates must beat every integer in a window around them, and
  // meet the half-divisor residual cap.
  const uint128 best = abs_residual(oracle.canonical, i, r);
  t.expect(2 * best <= r.a, "oracle-residual-cap",
           "2*|res|=" + i128_str(static_cast<int128>(2 * best)) +
               " a=" + std::to_string(r.a));
  for (int off = -3; off <= 3; ++off) {
    const int128 k_wide = static_cast<int128>(oracle.canonical) + off;
    if (k_wide < 0) continue;
    const Tick k = static_cast<Tick>(k_wide);
    if (!t.expect(best <= abs_residual(k, i, r), "oracle-window",
                  "k=" + std::to_string(k) + " beats canonical=" +
                      std::to_string(oracle.canonical)))
      return;
  }

  const uint128 rem = static_cast<uint128>(i) * r.d % r.a;
  const bool is_tie = 2 * rem == r.a;
  t.expect(oracle.tie == is_tie, "oracle-tie-flag",
           std::string("tie=") + (oracle.tie ? "true" : "false") +
               " 2*rem==a is " + (is_tie ? "true" : "false"));
  if (oracle.tie) {
    t.expect(oracle.upper == oracle.lower + 1 &&
                 oracle.canonical == oracle.upper &&
                 abs_residual(oracle.lower, i, r) ==
                     abs_residual(oracle.upper, i, r),
             "oracle-tie-shape",
             "lower=" + std::to_string(oracle.lower) +
                 " upper=" + std::to_string(oracle.upper) +
                 " canonical=" + std::to_string(oracle.canonical));
  } else {
    t.expect(oracle.lower == oracle.upper && oracle.canonical == oracle.lower,
             "oracle-point-shape", "canonical=" + std::to_string(oracle.canonical));
  }

  // Scale invariance: (cD, cA) must not move the argmin set.
  if (r.d <= 0x7FFFFFFFu && r.a <= 0x7FFFFFFFu) {
    const ArgminResult doubled = exact_compensate(i, RatioDA(2 * r.d, 2 * r.a));
    t.expect(doubled.lower == oracle.lower && doubled.upper == oracle.upper &&
                 doubled.tie == oracle.tie,
             "oracle-scale-invariance",
             "doubled=(" + std::to_string(doubled.lower) + "," +
                 std::to_string(doubled.upper) + ")");
  }
}

bool in_argmin(Tick j, const ArgminResult& oracle) {
  return j == oracle.lower || j == oracle.upper;
}

void check_search_result(TrialContext& t, const char* check,
                         const CompensationOutcome& out,
                         const ArgminResult& oracle) {
  t.expect(in_argmin(out.j, oracle) && (oracle.tie || out.j == oracle.canonical),
           check,
           "j=" + std::to_string(out.j) + " argmin=[" +
               std::to_string(oracle.lower) + "," + std::to_string(oracle.upper) +
               "] tie=" + (oracle.tie ? "true" : "false") +
               " case=" + to_string(out.terminal_case));
  t.expect(out.iterations >= 1, check, "iterations=0");
}

void check_seeded_search(TrialContext& t, const FloatEnv& env, const char* check,
                         const ArgminResult& oracle) {
  const CompensationOutcome out = compensate(t.i, t.r, env);
  check_search_result(t, check, out, oracle);

  const SearchState start = init_state(t.i, t.r, env);
  if (start.k == out.j) {
    t.expect(out.iterations == 1, "search-seeded-exactly",
             "k_init==j but iterations=" + std::to_string(out.iterations));
  }
  const int128 gap = start.k >= out.j
                         ? static_cast<int128>(start.k - out.j)
                         : static_cast<int128>(out.j - start.k);
  t.expect(static_cast<int128>(out.iterations) <= gap + 1, "search-step-budget",
           "iterations=" + std::to_string(out.iterations) +
               " |k_init-j|=" + i128_str(gap));
}

void check_walk_from(TrialContext& t, Tick k0, const ArgminResult& oracle) {
  SearchTrace trace;
  const CompensationOutcome out = compensate_from(t.i, t.r, k0, trace);
  check_search_result(t, "walk-argmin", out, oracle);

  t.expect(out.iterations == trace.size(), "walk-trace-length",
           "iterations=" + std::to_string(out.iterations) +
               " trace=" + std::to_string(trace.size()));
  if (trace.empty()) return;
  t.expect(trace.front().k == k0, "walk-start",
           "k0=" + std::to_string(k0) +
               " trace.front.k=" + std::to_string(trace.front().k));

  bool states_exact = true;
  bool progress_exact = true;
  for (std::size_t s = 0; s < trace.size(); ++s) {
    if (trace[s].delta != residual(trace[s].k, t.i, t.r)) {
      states_exact = false;
      break;
    }
    if (s + 1 < trace.size()) {
      // A re-dispatch happens only while the sign is stable, and moves
      // |delta| down by exactly a.
      const int128 cur = trace[s].delta;
      const int128 nxt = trace[s + 1].delta;
      const bool ok = cur > 0 ? (nxt == cur - t.r.a && nxt > 0)
                              : (cur < 0 && nxt == cur + t.r.a && nxt < 0);
      if (!ok) {
        progress_exact = false;
        break;
      }
    }
  }
  t.expect(states_exact, "walk-state-residual", "stale delta in trace");
  t.expect(progress_exact, "walk-progress",
           "|delta| did not shrink by exactly a across a re-dispatch");

  const int128 gap = k0 >= out.j ? static_cast<int128>(k0 - out.j)
                                 : static_cast<int128>(out.j - k0);
  t.expect(static_cast<int128>(out.iterations) <= gap + 1, "walk-step-budget",
           "iterations=" + std::to_string(out.iterations) +
               " |k0-j|=" + i128_str(gap));
}

void check_baseline(TrialContext& t) {
  const Tick i = t.i;
  const RatioDA& r = t.r;
  const FloatEnv env = FloatEnv::binary32();

  // Bracket containment for the slope actually walked.
  if (r.d != r.a) {
    const std::uint32_t num = r.d < r.a ? r.d : r.d - r.a;
    const std::uint32_t den = r.a;
    const FloatValue ts = fp_ratio_scaled(i, RatioDA(num, den), env);
    const CandidateBounds b = theoretical_bounds(ts, env);
    const int128 exact = static_cast<int128>(i) * num;
    t.expect(static_cast<int128>(b.lower) * den <= exact &&
                 exact <= static_cast<int128>(b.upper) * den,
             "bounds-containment",
             "bounds=[" + std::to_string(b.lower) + "," +
                 std::to_string(b.upper) + "] exact=" + i128_str(exact) +
                 "/" + std::to_string(den));
  }

  const BaselineOutcome out =
      bresenham_compensate(i, r, env, BoundsProvider::theoretical());
  // The walked result can land on either side of a .5 boundary but never
  // outside floor/ceil of the exact value.
  const uint128 prod = static_cast<uint128>(i) * r.d;
  const Tick fl = static_cast<Tick>(prod / r.a);
  const Tick ce = fl + (prod % r.a != 0 ? 1 : 0);
  t.expect(fl <= out.j && out.j <= ce, "baseline-floor-ceil",
           "j=" + std::to_string(out.j) + " floor=" + std::to_string(fl) +
               " ceil=" + std::to_string(ce));
  t.expect(out.iterations >= 1, "baseline-iterations", "iterations=0");

  // Within one tick of the wide-float reference, when that reference is
  // itself trustworthy (product exactly representable in binary64).
  if (prod < (static_cast<uint128>(1) << 52)) {
    const FloatEnv ref = FloatEnv::binary64();
    const Tick expect64 = round_half_up(fp_ratio_scaled(i, r, ref), ref);
    const std::int64_t err = static_cast<std::int64_t>(expect64) -
                             static_cast<std::int64_t>(out.j);
    t.expect(err >= -1 && err <= 1, "baseline-near-reference",
             "j=" + std::to_string(out.j) +
                 " reference=" + std::to_string(expect64));
  }
}

void run_trial(TrialContext& t) {
  const FuzzConfig& cfg = *t.cfg;
  SplitMix64 rng(SplitMix64::at(cfg.seed, t.trial));

  t.i = rng.next_below(cfg.i_max);
  const std::uint32_t a =
      1 + static_cast<std::uint32_t>(rng.next_below(cfg.ratio_max - 1));
  const std::uint64_t d_cap =
      std::min<std::uint64_t>(cfg.ratio_max, 2ull * a - 1);
  const std::uint32_t d =
      1 + static_cast<std::uint32_t>(rng.next_below(d_cap - 1));
  t.r = RatioDA(d, a);

  const ArgminResult oracle = exact_compensate(t.i, t.r);
  check_oracle(t, oracle);

  check_seeded_search(t, FloatEnv::binary32(), "search-argmin-b32", oracle);
  check_seeded_search(t, FloatEnv::binary64(), "search-argmin-b64", oracle);

  // Arbitrary start nearby (always), plus a full-range start when the
  // target is small enough that a long walk stays affordable.
  const Tick w = 2048;
  const Tick lo = oracle.canonical > w ? oracle.canonical - w : 0;
  check_walk_from(t, lo + rng.next_below(2 * w), oracle);
  if (oracle.canonical <= (Tick(1) << 18)) {
    check_walk_from(t, rng.next_below(2 * oracle.canonical + 16), oracle);
  }

  if (cfg.walk_override) {
    const Tick k0 = lo + rng.next_below(2 * w);
    const CompensationOutcome out = cfg.walk_override(t.i, t.r, k0);
    t.expect(in_argmin(out.j, oracle), "override-argmin",
             "k0=" + std::to_string(k0) + " j=" + std::to_string(out.j) +
                 " argmin=[" + std::to_string(oracle.lower) + "," +
                 std::to_string(oracle.upper) + "]");
  }

  check_baseline(t);
}

}  // namespace

std::string FuzzReport::summary() const {
  if (!failure) {
    return "fuzz: PASS (" + std::to_string(trials_run) + " trials, " +
           std::to_string(checks_run) + " checks)";
  }
  const Counterexample& c = *failure;
  return "fuzz: FAIL at trial " + std::to_string(c.trial) + ": " + c.check +
         "\n  inputs: i=" + std::to_string(c.i) + " d=" + std::to_string(c.d) +
         " a=" + std::to_string(c.a) + "\n  " + c.detail;
}

FuzzReport fuzz_oracle(const FuzzConfig& cfg) {
  if (cfg.ratio_max == 0)
    throw std::invalid_argument("fuzz_oracle: ratio_max must be >= 1");
  unsigned workers =
      cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > cfg.trials) workers = cfg.trials == 0 ? 1 : cfg.trials;

  std::vector<std::uint64_t> checks(workers, 0);
  std::vector<std::optional<Counterexample>> failures(workers);
  std::atomic<std::uint64_t> stop_at{~0ull};

  auto scan = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      if (trial > stop_at.load(std::memory_order_relaxed)) break;
      TrialContext t;
      t.cfg = &cfg;
      t.trial = trial;
      run_trial(t);
      checks[w] += t.checks;
      if (t.failure) {
        failures[w] = std::move(t.failure);
        // Let other workers skip trials that can no longer be first.
        std::uint64_t cur = stop_at.load(std::memory_order_relaxed);
        while (trial < cur &&
               !stop_at.compare_exchange_weak(cur, trial,
                                              std::memory_order_relaxed)) {
        }
        break;
      }
    }
  };

  if (workers == 1) {
    scan(0, 0, cfg.trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = cfg.trials * w / workers;
      const std::uint64_t hi = cfg.trials * (w + 1) / workers;
      pool.emplace_back(scan, w, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  FuzzReport report;
  for (unsigned w = 0; w < workers; ++w) {
    report.checks_run += checks[w];
    if (failures[w] &&
        (!report.failure || failures[w]->trial < report.failure->trial)) {
      report.failure = failures[w];
    }
  }
  report.trials_run = report.failure ? report.failure->trial + 1 : cfg.trials;
  return report;
}

}  // namespace cskew
