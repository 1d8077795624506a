#include <benchmark/benchmark.h>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/corpus.hpp"
#include "biasedcube/families.hpp"
#include "biasedcube/influence.hpp"
#include "biasedcube/noise.hpp"

namespace {

bcube::BiasedFunction sample(int n, double p) {
  bcube::Rng rng(bcube::mix_seed(7, static_cast<std::uint64_t>(n)));
  return bcube::random_boolean(n, bcube::Bias(p), 0.3, rng);
}

void BM_ForwardTransform(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(bcube::forward_transform(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardTransform)->DenseRange(8, 20, 4);

void BM_InfluenceTable(benchmark::State& state) {
  const auto s = bcube::forward_transform(sample(static_cast<int>(state.range(0)), 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(bcube::influence_table(s));
}
BENCHMARK(BM_InfluenceTable)->DenseRange(8, 20, 4);

void BM_NoiseSpectral(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(bcube::noise_apply(f, 0.2));
}
BENCHMARK(BM_NoiseSpectral)->DenseRange(8, 20, 4);

void BM_NoiseResampling(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(bcube::noise_apply_resampling(f, 0.2));
}
BENCHMARK(BM_NoiseResampling)->DenseRange(8, 20, 4);

void BM_TuranMatching(benchmark::State& state) {
  const auto g = bcube::Hypergraph::matching(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bcube::turan_exact(g, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TuranMatching)->DenseRange(5, 8, 1);

}  // namespace

BENCHMARK_MAIN();
