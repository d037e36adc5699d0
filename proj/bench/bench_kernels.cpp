// Serial reference vs OpenMP kernels: the census sweep and the weighted fuzzer.

#include <benchmark/benchmark.h>

#include "lapspread/enumerate.hpp"

using namespace lapspread;

namespace {

void BM_SweepSerial(benchmark::State& state) {
  GraphClassIter iter{static_cast<int>(state.range(0)), GraphFilter::parse("both-diam3"), true, false};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes_serial(iter).size());
}

void BM_SweepParallel(benchmark::State& state) {
  GraphClassIter iter{static_cast<int>(state.range(0)), GraphFilter::parse("both-diam3"), true, false};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(iter).size());
}

void BM_FuzzSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fuzz_weighted_serial(8, state.range(0), 1, FuzzMode::Uniform).worst_conj5.x);
}

void BM_FuzzParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fuzz_weighted(8, state.range(0), 1, FuzzMode::Uniform).worst_conj5.x);
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzSerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzParallel)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
