#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cskew/direct_search.hpp"
#include "cskew/types.hpp"

namespace cskew {

struct FuzzConfig {
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 7;
  Tick i_max = Tick(1) << 40;
  std::uint32_t ratio_max = 1u << 21;
  unsigned threads = 0;  // 0 = hardware concurrency

  // Test hook: stands in for compensate_from in the argmin-membership
  // check, so a deliberately broken walker can prove the fuzzer catches
  // wrong results. Production runs leave it empty.
  std::function<CompensationOutcome(Tick, const RatioDA&, Tick)> walk_override;
};

// First failing trial, with enough context to re-run it by hand.
struct Counterexample {
  std::uint64_t trial = 0;
  Tick i = 0;
  std::uint32_t d = 1;
  std::uint32_t a = 1;
  std::string check;   // name of the violated property
  std::string detail;  // observed values, human-readable
};

struct FuzzReport {
  std::uint64_t trials_run = 0;
  std::uint64_t checks_run = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure.has_value(); }
  std::string summary() const;
};

// Differential fuzz over random (i, D, A) with D < 2A: checks the exact
// oracle's window optimality and tie handling, the direct search from both
// float seeds and from arbitrary starts (trace-verified progress), and the
// line-stepping baseline's bracket containment, all against each other.
// Deterministic for a given (seed, trials): trial t draws from a substream
// keyed by (seed, t), so partitioning across threads cannot change what
// any trial sees. Stops at the lowest-numbered failing trial.
FuzzReport fuzz_oracle(const FuzzConfig& cfg);

}  // namespace cskew
