#include <benchmark/benchmark.h>

#include "factlab/factorial.hpp"
#include "factlab/field.hpp"

using namespace factlab;

namespace {

void BM_MontMul(benchmark::State& state) {
  const FieldCtx ctx(static_cast<u64>(state.range(0)));
  u64 acc = ctx.to_mont(3);
  const u64 step = ctx.to_mont(7);
  for (auto _ : state) {
    acc = ctx.mont_mul(acc, step);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MontMul)->Arg(1000003)->Arg(1000000000000000003);

void BM_CanonicalMul(benchmark::State& state) {
  const FieldCtx ctx(static_cast<u64>(state.range(0)));
  u64 acc = 3;
  for (auto _ : state) {
    acc = ctx.mul(acc, 7);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CanonicalMul)->Arg(1000000000000000003);

void BM_FactorialScan(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const FieldCtx ctx(p);
  for (auto _ : state) {
    FactorialScan scan(ctx, 0, p - 1);
    u64 last = 0;
    while (auto t = scan.next()) last = t->value;
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FactorialScan)->Arg(10007)->Arg(1000003)->Unit(benchmark::kMicrosecond);

}  // namespace
