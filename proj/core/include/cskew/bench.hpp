#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cskew/float_env.hpp"
#include "cskew/types.hpp"

namespace cskew {

enum class Algorithm {
  single_fp,         // binary32 compute-and-round, no repair pass
  bresenham_theory,  // line stepping over the roundoff-derived bracket
  bresenham_eps,     // line stepping over the ad-hoc eps bracket
  direct_search,     // float-seeded integer refinement
};

const char* to_string(Algorithm a);

enum class OutputFormat { markdown, csv, json_lines };

struct BenchConfig {
  std::uint32_t d = 1'000'000;       // nominal interval length
  double ppm = 100.0;                // skew drawn uniformly from +-ppm
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 42;
  std::vector<Tick> i_values = {1'000'000, 10'000'000, 100'000'000,
                                1'000'000'000};
  std::vector<Algorithm> algorithms = {
      Algorithm::single_fp, Algorithm::bresenham_theory,
      Algorithm::bresenham_eps, Algorithm::direct_search};
  FloatEnv init_env = FloatEnv::binary32();  // seeding/bracketing environment
  OutputFormat output_format = OutputFormat::markdown;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Error and iteration aggregates for one (algorithm, i) cell. Errors are
// signed (reference minus result); both sums are exact integers so means
// are one final division and independent of accumulation order.
struct StatsRow {
  Algorithm algorithm = Algorithm::direct_search;
  Tick i = 0;
  std::int64_t err_min = 0;
  std::int64_t err_max = 0;
  std::int64_t err_sum = 0;
  bool has_iterations = false;
  std::uint64_t iter_min = 0;
  std::uint64_t iter_max = 0;
  std::uint64_t iter_sum = 0;
  std::uint64_t n = 0;

  double err_mean() const;
  double iter_mean() const;
};

// The sampled ratio population: sample s has skew eps_s uniform in
// +-ppm*1e-6 and a_s = nearest integer to d*(1+eps_s), as a function of
// (seed, s) only — regeneration order and thread count cannot change it.
std::vector<RatioDA> generate_samples(const BenchConfig& cfg);

// Run one algorithm at one i over the sample set. The reference value per
// sample is the binary64 multiply-then-divide result, half-up rounded.
StatsRow run_row(Tick i, Algorithm alg, const std::vector<RatioDA>& samples,
                 const BenchConfig& cfg);

// All (algorithm, i) cells, algorithms outermost, in config order.
std::vector<StatsRow> run_bench(const BenchConfig& cfg);

// Render rows as a markdown table, a CSV document (header
// `algorithm,i,err_min,err_max,err_mean,iter_min,iter_max,iter_mean,n`),
// or one JSON object per line. Means are printed to 5 significant digits;
// iteration cells of algorithms without an iteration notion are empty
// (CSV), `--` (markdown), or omitted (JSON).
std::string emit_table(const std::vector<StatsRow>& rows, OutputFormat format);

}  // namespace cskew
