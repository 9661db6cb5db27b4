#include <benchmark/benchmark.h>

#include <complex>

#include "ezeta/bounds.hpp"
#include "ezeta/fixtures.hpp"
#include "ezeta/numerics.hpp"
#include "ezeta/optimizer.hpp"
#include "ezeta/param.hpp"
#include "ezeta/zeta_eval.hpp"

namespace {

using namespace ezeta;

void BM_ZetaCriticalLine(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(em_zeta({0.5, 14.134725}, ctx));
}
BENCHMARK(BM_ZetaCriticalLine)->Arg(30)->Arg(60)->Arg(120);

void BM_ZetaHeight(benchmark::State& state) {
  const PrecisionContext ctx(60);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(em_zeta({1.0, t}, ctx));
}
BENCHMARK(BM_ZetaHeight)->Arg(10)->Arg(100)->Arg(1000);

void BM_ZetaDerivative(benchmark::State& state) {
  const PrecisionContext ctx(60);
  for (auto _ : state) benchmark::DoNotOptimize(em_zeta_deriv({0.5, 20.0}, ctx));
}
BENCHMARK(BM_ZetaDerivative);

void BM_StieltjesTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_stieltjes(static_cast<int>(state.range(0)), 256, 200, 40));
}
BENCHMARK(BM_StieltjesTable)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_QhRow(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  const HParams p{parse_rational("1/W0"),     parse_rational("0.713814"), parse_rational("0.041793"),
                  parse_rational("1.671118"), parse_rational("3.367414"), parse_rational("H")};
  for (auto _ : state) benchmark::DoNotOptimize(q_h(p, ctx));
}
BENCHMARK(BM_QhRow)->Arg(30)->Arg(60)->Arg(120);

void BM_ReproduceTable(benchmark::State& state) {
  const PrecisionContext ctx;
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_table("Q", ctx));
}
BENCHMARK(BM_ReproduceTable)->Unit(benchmark::kMillisecond);

void BM_OptimizeRow(benchmark::State& state) {
  const FixtureSet& fixtures = FixtureSet::shipped();
  const OptimizationProblem problem = problem_for_row(*fixtures.find("Q", "13"), fixtures);
  for (auto _ : state) benchmark::DoNotOptimize(optimize(problem));
}
BENCHMARK(BM_OptimizeRow)->Unit(benchmark::kMillisecond);

void BM_ReciprocalGrid(benchmark::State& state) {
  const PrecisionContext ctx(30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_max_on_segment(1, 2, 20, 0.05, SupTarget::reciprocal, true, ctx));
  }
}
BENCHMARK(BM_ReciprocalGrid)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
