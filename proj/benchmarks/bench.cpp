// Microbenchmarks for the heavy paths: the product-tree factorial, the two
// ln(n!) routes, error measurement, theta extraction, and table rendering.
#include <benchmark/benchmark.h>

#include "stirlab/analysis.hpp"
#include "stirlab/factorial.hpp"
#include "stirlab/precision.hpp"
#include "stirlab/table.hpp"

namespace {

const stirlab::PrecisionContext kCtx{};

// factorial_exact memoizes per n, so rotate through enough distinct inputs
// to defeat the cache and measure the tree itself.
void BM_FactorialProductTree(benchmark::State& state) {
  const long base = state.range(0);
  long k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stirlab::factorial_exact(base + (k++ % 128)));
  }
}
BENCHMARK(BM_FactorialProductTree)
    ->Arg(10000)
    ->Arg(100000)
    ->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

void BM_LnFactorialTree(benchmark::State& state) {
  const long n = state.range(0);
  stirlab::factorial_exact(n);  // warm the memo: measure the ln route alone
  for (auto _ : state) {
    benchmark::DoNotOptimize(stirlab::ln_factorial_exact(n, kCtx));
  }
}
BENCHMARK(BM_LnFactorialTree)->Arg(1000)->Arg(10000)->Arg(1000000);

void BM_LnFactorialSum(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stirlab::ln_factorial_sum(n, kCtx));
  }
}
BENCHMARK(BM_LnFactorialSum)->Arg(1000)->Arg(10000);

void BM_PercentageError(benchmark::State& state) {
  const long n = state.range(0);
  stirlab::factorial_exact(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        stirlab::percentage_error(stirlab::MethodId::SAM, n, kCtx));
  }
}
BENCHMARK(BM_PercentageError)->Arg(1000)->Arg(1000000);

void BM_Theta(benchmark::State& state) {
  const long n = state.range(0);
  stirlab::factorial_exact(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stirlab::theta_of_n(n, kCtx));
  }
}
BENCHMARK(BM_Theta)->Arg(100)->Arg(10000);

void BM_EstimateA(benchmark::State& state) {
  const long n = state.range(0);
  stirlab::factorial_exact(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stirlab::estimate_A(n, kCtx));
  }
}
BENCHMARK(BM_EstimateA)->Arg(1000)->Arg(10000);

void BM_RenderTableMarkdown(benchmark::State& state) {
  stirlab::TableRequest req =
      stirlab::table_preset(stirlab::TableKind::T1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stirlab::render_table(req, kCtx));
  }
}
BENCHMARK(BM_RenderTableMarkdown)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
