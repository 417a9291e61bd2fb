#include <benchmark/benchmark.h>

#include "fqv/fermat.hpp"
#include "fqv/sweep.hpp"

namespace {

constexpr fqv::u64 kPrime = 4'294'967'291;

void BM_InverseSumChunked(benchmark::State& state) {
  const auto limit = static_cast<fqv::u64>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqv::inverse_power_sum(2, 1, limit, kPrime * kPrime));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_InverseSumReference(benchmark::State& state) {
  const auto limit = static_cast<fqv::u64>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqv::inverse_power_sum_reference(2, 1, limit, kPrime * kPrime));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

fqv::SweepConfig sweep_config() {
  fqv::SweepConfig c;
  c.families = {"prop1", "thm1", "wolstenholme"};
  c.prime_range = fqv::Range{3, 3000};
  return c;
}

void BM_SweepParallel(benchmark::State& state) {
  const auto config = sweep_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqv::run_sweep(config, fqv::Execution::parallel));
  }
}

void BM_SweepSerial(benchmark::State& state) {
  const auto config = sweep_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqv::run_sweep(config, fqv::Execution::serial));
  }
}

}  // namespace

BENCHMARK(BM_InverseSumChunked)->RangeMultiplier(4)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_InverseSumReference)->RangeMultiplier(4)->Range(1 << 12, 1 << 20);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
