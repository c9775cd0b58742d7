#include <benchmark/benchmark.h>

#include "rectlay/enumerate.hpp"
#include "rectlay/fixtures.hpp"
#include "rectlay/recognize.hpp"
#include "rectlay/transversal.hpp"

namespace {

void BM_RecognizeStack(benchmark::State& state) {
  auto g = rectlay::fixtures::stack_dual(state.range(0));
  for (auto _ : state) {
    auto result = rectlay::recognize_dual(g);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_RecognizeStack)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)
    ->Unit(benchmark::kMillisecond);

void BM_RecognizeFan(benchmark::State& state) {
  auto g = rectlay::fixtures::fan_dual(state.range(0));
  for (auto _ : state) {
    auto result = rectlay::recognize_dual(g);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_RecognizeFan)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)
    ->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) {
    auto c = rectlay::census(state.range(0));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Census)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_FlipClosurePinwheel(benchmark::State& state) {
  auto layout = rectlay::fixtures::pinwheel(false);
  for (auto _ : state) {
    auto closure = rectlay::flip_closure_size(layout, 64);
    benchmark::DoNotOptimize(closure);
  }
}
BENCHMARK(BM_FlipClosurePinwheel)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
