#include <benchmark/benchmark.h>

#include "qkhook/closed_forms.hpp"
#include "qkhook/pieri.hpp"
#include "qkhook/tableaux.hpp"

using namespace qkhook;

// Full sweep of hook products over every classical shape of Gr(m, 2m).
static void BM_HookProductsSquare(benchmark::State& state) {
  const auto m = state.range(0);
  const GrassContext ctx(m, 2 * m);
  const auto shapes = classical_shapes(ctx);
  for (auto _ : state) {
    std::size_t terms = 0;
    for (const auto& l : shapes) terms += multiply_by_hook(l, {m - 1, m - 1}).size();
    benchmark::DoNotOptimize(terms);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shapes.size()));
}
BENCHMARK(BM_HookProductsSquare)->DenseRange(2, 4);

static void BM_RowPieri(benchmark::State& state) {
  const auto n = state.range(0);
  const GrassContext ctx(n / 2, n);
  const auto l = QuantumShape::from_partition(ctx, rho_partition(n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(pieri_row(l, ctx.cols() / 2));
}
BENCHMARK(BM_RowPieri)->DenseRange(6, 12, 2);

static void BM_StaircaseLr(benchmark::State& state) {
  const auto t = state.range(0);
  const auto lambda = rho_partition(t);
  const auto mu = hook_partition({t - 2, t - 2});
  const auto nu = staircase_target(t);
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(lambda, mu, nu));
}
BENCHMARK(BM_StaircaseLr)->DenseRange(3, 6);

static void BM_PositiveFormula(benchmark::State& state) {
  const auto t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(c_positive(t, t / 2, t / 2));
}
BENCHMARK(BM_PositiveFormula)->RangeMultiplier(4)->Range(4, 256);

static void BM_DoubleSum(benchmark::State& state) {
  const auto t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(c_double_sum(t, t / 2, t / 2));
}
BENCHMARK(BM_DoubleSum)->RangeMultiplier(4)->Range(4, 64);

BENCHMARK_MAIN();
