#include <benchmark/benchmark.h>

#include "factlab/constructions.hpp"
#include "factlab/fourier.hpp"
#include "factlab/point_counts.hpp"

using namespace factlab;

namespace {

void BM_CountFull(benchmark::State& state) {
  const FieldCtx ctx(static_cast<u64>(state.range(0)));
  const Poly P = falling_product_poly(ctx, 5), Q = falling_product_poly(ctx, 7);
  for (auto _ : state) benchmark::DoNotOptimize(count_full(ctx, P, Q));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountFull)->Arg(1009)->Arg(100003)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const FieldCtx ctx(p);
  const Progression I{5, 17, p / 3};
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(ctx, I).l1);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Spectrum)->Arg(1009)->Arg(100003)->Unit(benchmark::kMillisecond);

}  // namespace
