#include <benchmark/benchmark.h>

#include "nakayama/bijection.hpp"
#include "nakayama/counting.hpp"
#include "nakayama/exceptional.hpp"
#include "nakayama/representation.hpp"

namespace {

using namespace nakayama;

static void BM_EnumerateComplete(benchmark::State& state) {
  const Rank n(static_cast<int>(state.range(0)));
  std::size_t produced = 0;
  for (auto _ : state) {
    auto all = enumerate_complete(n);
    produced += all.size();
    benchmark::DoNotOptimize(all);
  }
  state.counters["sequences"] = benchmark::Counter(static_cast<double>(produced), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_EnumerateComplete)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

static void BM_PhiAllSequences(benchmark::State& state) {
  const auto all = enumerate_complete(Rank(static_cast<int>(state.range(0))));
  for (auto _ : state)
    for (const auto& e : all) benchmark::DoNotOptimize(phi(e));
}
BENCHMARK(BM_PhiAllSequences)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_GammaAllFunctions(benchmark::State& state) {
  const auto all = enumerate_idempotent(Rank(static_cast<int>(state.range(0))));
  for (auto _ : state)
    for (const auto& a : all) benchmark::DoNotOptimize(gamma(a));
}
BENCHMARK(BM_GammaAllFunctions)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_CountFormula(benchmark::State& state) {
  const Rank n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_formula(n));
}
BENCHMARK(BM_CountFormula)->RangeMultiplier(4)->Range(8, 512);

static void BM_ExtOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Rank rank(n);
  for (auto _ : state) benchmark::DoNotOptimize(rep::ext_dim_oracle(n - 1, Indec::simple(1), Indec::simple(n), rank));
}
BENCHMARK(BM_ExtOracle)->DenseRange(2, 10, 2);

}  // namespace

BENCHMARK_MAIN();
