#include <benchmark/benchmark.h>

#include "rigid1d/certify_kernels.hpp"
#include "rigid1d/rigidity.hpp"

using namespace rigid1d;

namespace {

std::vector<QuadVal> default_taus(int k) {
  static const RigidityParams p = tune_parameters(
      make_translation_data(WitnessedMatrix::from_word(Word::parse("g1g2")), QuadVal(1), QuadVal::sqrt_of(2)));
  std::vector<QuadVal> taus;
  for (long j = 1; j <= k; ++j) taus.push_back(p.tau(j));
  return taus;
}

void bm_serial(benchmark::State& state) {
  const auto taus = default_taus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_sums_sorted_serial(taus));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void bm_parallel(benchmark::State& state) {
  const auto taus = default_taus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_sums_sorted_parallel(taus));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

}  // namespace

BENCHMARK(bm_serial)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_parallel)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
