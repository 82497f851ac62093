#include "cskew/bench.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

#include "cskew/bresenham.hpp"
#include "cskew/direct_search.hpp"
#include "cskew/rng.hpp"

namespace cskew {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::single_fp:     return "single_fp";
    case Algorithm::bresenham_theory: return "bresenham_theory";
    case Algorithm::bresenham_eps: return "bresenham_eps";
    case Algorithm::direct_search: return "direct_search";
  }
  return "?";
}

double StatsRow::err_mean() const {
  return n == 0 ? 0.0 : static_cast<double>(err_sum) / static_cast<double>(n);
}

double StatsRow::iter_mean() const {
  return n == 0 ? 0.0 : static_cast<double>(iter_sum) / static_cast<double>(n);
}

std::vector<RatioDA> generate_samples(const BenchConfig& cfg) {
  if (cfg.d == 0)
    throw std::invalid_argument("generate_samples: d must be >= 1");
  const double rel = cfg.ppm * 1e-6;
  if (!(rel >= 0.0) || rel >= 1.0)
    throw std::invalid_argument("generate_samples: ppm out of range [0, 1e6)");
  if (static_cast<double>(cfg.d) * (1.0 + rel) >=
      static_cast<double>(std::numeric_limits<std::uint32_t>::max()))
    throw std::invalid_argument("generate_samples: d*(1+ppm) overflows the ratio width");

  std::vector<RatioDA> out;
  out.reserve(cfg.n_samples);
  for (std::uint64_t s = 0; s < cfg.n_samples; ++s) {
    const std::uint64_t bits = SplitMix64::at(cfg.seed, s);
    const double u01 = (bits >> 11) * 0x1.0p-53;
    const double eps = (2.0 * u01 - 1.0) * rel;
    // nearest integer, ties to even (the default rounding mode)
    const long long a = std::llrint(static_cast<double>(cfg.d) * (1.0 + eps));
    out.emplace_back(cfg.d, static_cast<std::uint32_t>(a < 1 ? 1 : a));
  }
  return out;
}

namespace {

struct Partial {
  std::int64_t err_min = std::numeric_limits<std::int64_t>::max();
  std::int64_t err_max = std::numeric_limits<std::int64_t>::min();
  std::int64_t err_sum = 0;
  std::uint64_t iter_min = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t iter_max = 0;
  std::uint64_t iter_sum = 0;
  std::uint64_t n = 0;

  void add(std::int64_t err) {
    if (err < err_min) err_min = err;
    if (err > err_max) err_max = err;
    err_sum += err;
    ++n;
  }
  void add_iters(std::uint64_t it) {
    if (it < iter_min) iter_min = it;
    if (it > iter_max) iter_max = it;
    iter_sum += it;
  }
  void merge(const Partial& o) {
    if (o.n == 0) return;
    if (o.err_min < err_min) err_min = o.err_min;
    if (o.err_max > err_max) err_max = o.err_max;
    err_sum += o.err_sum;
    if (o.iter_min < iter_min) iter_min = o.iter_min;
    if (o.iter_max > iter_max) iter_max = o.iter_max;
    iter_sum += o.iter_sum;
    n += o.n;
  }
};

Partial run_span(Tick i, Algorithm alg, const RatioDA* samples,
                 std::uint64_t count, const BenchConfig& cfg) {
  const FloatEnv ref_env = FloatEnv::binary64(EvalOrder::mul_then_div);
  const FloatEnv fp32_env{24, cfg.init_env.order};
  const BoundsProvider theory = BoundsProvider::theoretical();
  const BoundsProvider eps =
      BoundsProvider::fixed_epsilon(1e-7 * static_cast<double>(i));

  Partial p;
  for (std::uint64_t s = 0; s < count; ++s) {
    const RatioDA& r = samples[s];
    const Tick ref = round_half_up(fp_ratio_scaled(i, r, ref_env), ref_env);
    Tick j = 0;
    switch (alg) {
      case Algorithm::single_fp:
        j = round_half_up(fp_ratio_scaled(i, r, fp32_env), fp32_env);
        break;
      case Algorithm::bresenham_theory: {
        const BaselineOutcome out =
            bresenham_compensate(i, r, cfg.init_env, theory);
        j = out.j;
        p.add_iters(out.iterations);
        break;
      }
      case Algorithm::bresenham_eps: {
        const BaselineOutcome out = bresenham_compensate(i, r, cfg.init_env, eps);
        j = out.j;
        p.add_iters(out.iterations);
        break;
      }
      case Algorithm::direct_search: {
        const CompensationOutcome out = compensate(i, r, cfg.init_env);
        j = out.j;
        p.add_iters(out.iterations);
        break;
      }
    }
    p.add(static_cast<std::int64_t>(ref) - static_cast<std::int64_t>(j));
  }
  return p;
}

bool algorithm_has_iterations(Algorithm a) {
  return a != Algorithm::single_fp;
}

// 5 significant digits, trailing zeros kept ("0.0000", "2.4992",
// "1.9132e+01" for wide values) — still a valid JSON number either way.
std::string fmt_mean(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.5g", v);
  return buf;
}

}  // namespace

StatsRow run_row(Tick i, Algorithm alg, const std::vector<RatioDA>& samples,
                 const BenchConfig& cfg) {
  unsigned workers = cfg.threads != 0 ? cfg.threads
                                      : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > samples.size())
    workers = samples.size() == 0 ? 1 : static_cast<unsigned>(samples.size());

  std::vector<Partial> parts(workers);
  if (workers == 1) {
    parts[0] = run_span(i, alg, samples.data(), samples.size(), cfg);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t total = samples.size();
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        parts[w] = run_span(i, alg, samples.data() + lo, hi - lo, cfg);
      });
    }
    for (auto& t : pool) t.join();
  }

  Partial all;
  for (const Partial& p : parts) all.merge(p);

  StatsRow row;
  row.algorithm = alg;
  row.i = i;
  row.n = all.n;
  row.has_iterations = algorithm_has_iterations(alg);
  if (all.n != 0) {
    row.err_min = all.err_min;
    row.err_max = all.err_max;
    row.err_sum = all.err_sum;
    if (row.has_iterations) {
      row.iter_min = all.iter_min;
      row.iter_max = all.iter_max;
      row.iter_sum = all.iter_sum;
    }
  }
  return row;
}

std::vector<StatsRow> run_bench(const BenchConfig& cfg) {
  const std::vector<RatioDA> samples = generate_samples(cfg);
  std::vector<StatsRow> rows;
  rows.reserve(cfg.algorithms.size() * cfg.i_values.size());
  for (Algorithm alg : cfg.algorithms)
    for (Tick i : cfg.i_values)
      rows.push_back(run_row(i, alg, samples, cfg));
  return rows;
}

std::string emit_table(const std::vector<StatsRow>& rows, OutputFormat format) {
  std::string out;
  char buf[256];
  switch (format) {
    case OutputFormat::csv:
      out += "algorithm,i,err_min,err_max,err_mean,iter_min,iter_max,iter_mean,n\n";
      for (const StatsRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%" PRIu64 ",%" PRId64 ",%" PRId64 ",%s,",
                      to_string(r.algorithm), r.i, r.err_min, r.err_max,
                      fmt_mean(r.err_mean()).c_str());
        out += buf;
        if (r.has_iterations) {
          std::snprintf(buf, sizeof buf, "%" PRIu64 ",%" PRIu64 ",%s,",
                        r.iter_min, r.iter_max, fmt_mean(r.iter_mean()).c_str());
          out += buf;
        } else {
          out += ",,,";
        }
        std::snprintf(buf, sizeof buf, "%" PRIu64 "\n", r.n);
        out += buf;
      }
      break;
    case OutputFormat::markdown:
      out += "| algorithm | i | err min | err max | err mean | iter min | iter max "
             "| iter mean | n |\n";
      out += "|---|---:|---:|---:|---:|---:|---:|---:|---:|\n";
      for (const StatsRow& r : rows) {
        std::snprintf(buf, sizeof buf, "| %s | %" PRIu64 " | %" PRId64 " | %" PRId64 " | %s | ",
                      to_string(r.algorithm), r.i, r.err_min, r.err_max,
                      fmt_mean(r.err_mean()).c_str());
        out += buf;
        if (r.has_iterations) {
          std::snprintf(buf, sizeof buf, "%" PRIu64 " | %" PRIu64 " | %s | ",
                        r.iter_min, r.iter_max, fmt_mean(r.iter_mean()).c_str());
          out += buf;
        } else {
          out += "-- | -- | -- | ";
        }
        std::snprintf(buf, sizeof buf, "%" PRIu64 " |\n", r.n);
        out += buf;
      }
      break;
    case OutputFormat::json_lines:
      for (const StatsRow& r : rows) {
        std::snprintf(buf, sizeof buf,
                      "{\"algorithm\":\"%s\",\"i\":%" PRIu64 ",\"err_min\":%" PRId64
                      ",\"err_max\":%" PRId64 ",\"err_mean\":%s",
                      to_string(r.algorithm), r.i, r.err_min, r.err_max,
                      fmt_mean(r.err_mean()).c_str());
        out += buf;
        if (r.has_iterations) {
          std::snprintf(buf, sizeof buf,
                        ",\"iter_min\":%" PRIu64 ",\"iter_max\":%" PRIu64
                        ",\"iter_mean\":%s",
                        r.iter_min, r.iter_max, fmt_mean(r.iter_mean()).c_str());
          out += buf;
        }
        std::snprintf(buf, sizeof buf, ",\"n\":%" PRIu64 "}\n", r.n);
        out += buf;
      }
      break;
  }
  return out;
}

}  // namespace cskew
