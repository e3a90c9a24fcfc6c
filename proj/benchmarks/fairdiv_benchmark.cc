#include <benchmark/benchmark.h>

#include "fairdiv/additive_alg.h"
#include "fairdiv/completion.h"
#include "fairdiv/generators.h"
#include "fairdiv/oracle.h"
#include "fairdiv/subadditive_alg.h"
#include "fairdiv/verify.h"

namespace fairdiv {
namespace {

void BM_ExactMnw(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance instance = RandomAdditive(3, m, 10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ExactMnw(instance));
}
BENCHMARK(BM_ExactMnw)->DenseRange(4, 10, 2);

void BM_ExactMnwPlain(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance instance = RandomAdditive(3, m, 10, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactMnw(instance, SearchMode::kPlain));
  }
}
BENCHMARK(BM_ExactMnwPlain)->DenseRange(4, 10, 2);

void BM_Algorithm1(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance instance = RandomAdditive(3, m, 10, 11);
  const Allocation x = ExactMnw(instance).allocation;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Algorithm1(instance, x, Ratio(1, 2)));
  }
}
BENCHMARK(BM_Algorithm1)->DenseRange(4, 10, 2);

void BM_Algorithm2(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance instance = RandomXos(3, m, 3, 13);
  const Allocation x = ExactMnw(instance).allocation;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Algorithm2(instance, x, Ratio(1, 2)));
  }
}
BENCHMARK(BM_Algorithm2)->DenseRange(3, 7, 2);

void BM_MmsShare(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance instance = RandomAdditive(3, m, 10, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MmsShare(instance, 0, 3, Bundle::Full(m)));
  }
}
BENCHMARK(BM_MmsShare)->DenseRange(4, 10, 2);

void BM_PipelineAdditive(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance instance = RandomAdditive(3, m, 10, 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        PipelineAdditive(instance, Ratio(1, 2), {.mms_family = false}));
  }
}
BENCHMARK(BM_PipelineAdditive)->DenseRange(4, 8, 2);

}  // namespace
}  // namespace fairdiv

BENCHMARK_MAIN();
