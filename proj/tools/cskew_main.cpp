// cskew: skew-compensated clock playground.
//   bench      — error/iteration statistics over a sampled skew population
//   compensate — one-shot compensation of a single (i, d, a)
//   fuzz       — differential property fuzz of all engines
// Exit codes: 0 ok, 1 invariant violation found, 2 bad arguments.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cskew/bench.hpp"
#include "cskew/bresenham.hpp"
#include "cskew/direct_search.hpp"
#include "cskew/float_env.hpp"
#include "cskew/fuzz.hpp"

namespace {

cskew::Algorithm parse_algorithm(const std::string& name) {
  using cskew::Algorithm;
  if (name == "fp32" || name == "single_fp") return Algorithm::single_fp;
  if (name == "bres-theory" || name == "bresenham_theory")
    return Algorithm::bresenham_theory;
  if (name == "bres-eps" || name == "bresenham_eps")
    return Algorithm::bresenham_eps;
  if (name == "ds" || name == "direct_search") return Algorithm::direct_search;
  throw CLI::ValidationError("--alg", "unknown algorithm '" + name + "'");
}

cskew::OutputFormat parse_format(const std::string& name) {
  if (name == "md") return cskew::OutputFormat::markdown;
  if (name == "csv") return cskew::OutputFormat::csv;
  if (name == "jsonl") return cskew::OutputFormat::json_lines;
  throw CLI::ValidationError("--format", "unknown format '" + name + "'");
}

cskew::EvalOrder parse_order(const std::string& name) {
  if (name == "muldiv") return cskew::EvalOrder::mul_then_div;
  if (name == "divmul") return cskew::EvalOrder::div_then_mul;
  throw CLI::ValidationError("--eval-order", "unknown order '" + name + "'");
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << text;
  f.flush();
  if (!f) {
    std::fprintf(stderr, "cskew: cannot write '%s'\n", out_path.c_str());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew-compensated clock algorithms"};
  app.require_subcommand(1);

  // --- bench ---------------------------------------------------------
  cskew::BenchConfig bench_cfg;
  std::vector<std::string> alg_names;
  int init_precision = 32;
  std::string eval_order = "muldiv";
  std::string format = "md";
  std::string out_path;

  CLI::App* bench = app.add_subcommand("bench", "error/iteration statistics");
  bench->add_option("--d", bench_cfg.d, "nominal interval length")
      ->capture_default_str();
  bench->add_option("--ppm", bench_cfg.ppm, "skew range, +- parts per million")
      ->capture_default_str();
  bench->add_option("--samples", bench_cfg.n_samples, "ratio samples per row")
      ->capture_default_str();
  bench->add_option("--seed", bench_cfg.seed, "sample stream seed")
      ->capture_default_str();
  bench->add_option("--i", bench_cfg.i_values, "hardware increments (comma list)")
      ->delimiter(',');
  bench
      ->add_option("--alg", alg_names,
                   "algorithms: fp32,bres-theory,bres-eps,ds (comma list)")
      ->delimiter(',');
  bench
      ->add_option("--init-precision", init_precision,
                   "seeding/bracketing float precision")
      ->check(CLI::IsMember({32, 64}))
      ->capture_default_str();
  bench->add_option("--eval-order", eval_order, "muldiv or divmul")
      ->check(CLI::IsMember({"muldiv", "divmul"}))
      ->capture_default_str();
  bench->add_option("--format", format, "md, csv, or jsonl")
      ->check(CLI::IsMember({"md", "csv", "jsonl"}))
      ->capture_default_str();
  bench->add_option("--out", out_path, "write output here instead of stdout");
  bench->add_option("--threads", bench_cfg.threads,
                    "worker count (0 = hardware)");

  // --- compensate ----------------------------------------------------
  std::uint64_t c_i = 0;
  std::uint32_t c_d = 0, c_a = 0;
  std::string c_alg = "ds";
  int c_precision = 32;

  CLI::App* comp = app.add_subcommand("compensate", "compensate one increment");
  comp->add_option("--i", c_i, "hardware increment")->required();
  comp->add_option("--d", c_d, "ratio numerator")->required();
  comp->add_option("--a", c_a, "ratio denominator")->required();
  comp->add_option("--alg", c_alg, "ds, bres, fp32, or fp64")
      ->check(CLI::IsMember({"ds", "bres", "fp32", "fp64"}))
      ->capture_default_str();
  comp
      ->add_option("--init-precision", c_precision,
                   "seeding precision for ds/bres")
      ->check(CLI::IsMember({32, 64}))
      ->capture_default_str();

  // --- fuzz ----------------------------------------------------------
  cskew::FuzzConfig fuzz_cfg;
  CLI::App* fuzz = app.add_subcommand("fuzz", "differential property fuzz");
  fuzz->add_option("--trials", fuzz_cfg.trials, "number of trials")
      ->capture_default_str();
  fuzz->add_option("--seed", fuzz_cfg.seed, "trial stream seed")
      ->capture_default_str();
  fuzz->add_option("--i-max", fuzz_cfg.i_max, "largest hardware increment")
      ->capture_default_str();
  fuzz->add_option("--ratio-max", fuzz_cfg.ratio_max,
                   "largest ratio component")
      ->capture_default_str();
  fuzz->add_option("--threads", fuzz_cfg.threads,
                   "worker count (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version are success, not bad args
  }

  try {
    if (bench->parsed()) {
      if (!alg_names.empty()) {
        bench_cfg.algorithms.clear();
        for (const std::string& name : alg_names)
          bench_cfg.algorithms.push_back(parse_algorithm(name));
      }
      bench_cfg.init_env =
          cskew::FloatEnv{init_precision == 32 ? 24 : 53, parse_order(eval_order)};
      bench_cfg.output_format = parse_format(format);
      const std::vector<cskew::StatsRow> rows = cskew::run_bench(bench_cfg);
      return emit(cskew::emit_table(rows, bench_cfg.output_format), out_path);
    }

    if (comp->parsed()) {
      const cskew::RatioDA r(c_d, c_a);
      const cskew::FloatEnv env = c_precision == 32 ? cskew::FloatEnv::binary32()
                                                    : cskew::FloatEnv::binary64();
      if (c_alg == "ds") {
        const cskew::CompensationOutcome out = cskew::compensate(c_i, r, env);
        std::printf("j=%llu iterations=%llu case=%s\n",
                    static_cast<unsigned long long>(out.j),
                    static_cast<unsigned long long>(out.iterations),
                    cskew::to_string(out.terminal_case));
      } else if (c_alg == "bres") {
        const cskew::BaselineOutcome out = cskew::bresenham_compensate(
            c_i, r, env, cskew::BoundsProvider::theoretical());
        std::printf("j=%llu iterations=%llu case=--\n",
                    static_cast<unsigned long long>(out.j),
                    static_cast<unsigned long long>(out.iterations));
      } else {
        const cskew::FloatEnv fenv = c_alg == "fp32" ? cskew::FloatEnv::binary32()
                                                     : cskew::FloatEnv::binary64();
        const cskew::Tick j =
            cskew::round_half_up(cskew::fp_ratio_scaled(c_i, r, fenv), fenv);
        std::printf("j=%llu iterations=-- case=--\n",
                    static_cast<unsigned long long>(j));
      }
      return 0;
    }

    // fuzz
    const cskew::FuzzReport report = cskew::fuzz_oracle(fuzz_cfg);
    std::printf("%s\n", report.summary().c_str());
    return report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cskew: %s\n", e.what());
    return 2;
  }
}
