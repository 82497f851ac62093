// Microbenchmarks of the compensation engines over the benchmark skew
// population (d = 1e6, +-100 ppm, seed 42). Ratios are pre-generated and
// cycled so the timed region is the engine alone.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "cskew/bench.hpp"
#include "cskew/bresenham.hpp"
#include "cskew/direct_search.hpp"
#include "cskew/float_env.hpp"
#include "cskew/oracle.hpp"

namespace {

using namespace cskew;

constexpr std::size_t kPoolMask = 4095;

const std::vector<RatioDA>& sample_pool() {
  static const std::vector<RatioDA> pool = [] {
    BenchConfig cfg;
    cfg.n_samples = kPoolMask + 1;
    return generate_samples(cfg);
  }();
  return pool;
}

void BM_exact_oracle(benchmark::State& state) {
  const std::vector<RatioDA>& pool = sample_pool();
  const Tick i = static_cast<Tick>(state.range(0));
  std::size_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_compensate(i, pool[s++ & kPoolMask]));
  }
}
BENCHMARK(BM_exact_oracle)->Arg(1'000'000)->Arg(1'000'000'000);

void BM_single_fp32(benchmark::State& state) {
  const std::vector<RatioDA>& pool = sample_pool();
  const FloatEnv env = FloatEnv::binary32();
  const Tick i = static_cast<Tick>(state.range(0));
  std::size_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        round_half_up(fp_ratio_scaled(i, pool[s++ & kPoolMask], env), env));
  }
}
BENCHMARK(BM_single_fp32)->Arg(1'000'000)->Arg(1'000'000'000);

void BM_direct_search_b32(benchmark::State& state) {
  const std::vector<RatioDA>& pool = sample_pool();
  const FloatEnv env = FloatEnv::binary32();
  const Tick i = static_cast<Tick>(state.range(0));
  std::size_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compensate(i, pool[s++ & kPoolMask], env));
  }
}
BENCHMARK(BM_direct_search_b32)
    ->Arg(1'000'000)
    ->Arg(100'000'000)
    ->Arg(1'000'000'000);

void BM_direct_search_b64(benchmark::State& state) {
  const std::vector<RatioDA>& pool = sample_pool();
  const FloatEnv env = FloatEnv::binary64();
  const Tick i = static_cast<Tick>(state.range(0));
  std::size_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compensate(i, pool[s++ & kPoolMask], env));
  }
}
BENCHMARK(BM_direct_search_b64)->Arg(1'000'000'000);

void BM_bresenham_theory(benchmark::State& state) {
  const std::vector<RatioDA>& pool = sample_pool();
  const FloatEnv env = FloatEnv::binary32();
  const BoundsProvider provider = BoundsProvider::theoretical();
  const Tick i = static_cast<Tick>(state.range(0));
  std::size_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bresenham_compensate(i, pool[s++ & kPoolMask], env, provider));
  }
}
BENCHMARK(BM_bresenham_theory)->Arg(1'000'000)->Arg(100'000'000);

void BM_bresenham_eps(benchmark::State& state) {
  const std::vector<RatioDA>& pool = sample_pool();
  const FloatEnv env = FloatEnv::binary32();
  const Tick i = static_cast<Tick>(state.range(0));
  const BoundsProvider provider = BoundsProvider::fixed_epsilon(1e-7 * i);
  std::size_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bresenham_compensate(i, pool[s++ & kPoolMask], env, provider));
  }
}
BENCHMARK(BM_bresenham_eps)->Arg(1'000'000)->Arg(100'000'000);

void BM_generate_samples(benchmark::State& state) {
  BenchConfig cfg;
  cfg.n_samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_samples(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_generate_samples)->Arg(10'000);

}  // namespace

BENCHMARK_MAIN();
