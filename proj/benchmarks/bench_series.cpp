#include <benchmark/benchmark.h>

#include "catwords/genfun.hpp"
#include "catwords/series.hpp"

using namespace catwords;

namespace {

void BM_SeriesFor(benchmark::State& state) {
  const auto& names = genfun_patterns();
  const auto& name = names[state.range(0)];
  const auto p = VincularPattern::parse(name);
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(series_for(p, order));
  state.SetLabel(name);
}
BENCHMARK(BM_SeriesFor)
    ->ArgsProduct({benchmark::CreateDenseRange(0, 8, 1), {12, 24}})
    ->Unit(benchmark::kMillisecond);

void BM_Sqrt(benchmark::State& state) {
  const Series f = Series::polynomial({1, -10, 37, -62, 46, -12, 1}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqrt(f));
}
BENCHMARK(BM_Sqrt)->RangeMultiplier(2)->Range(16, 128);

void BM_Divide(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Series f = Series::polynomial({1, 2, 3, 4}, order);
  const Series g = Series::polynomial({1, -3, 1}, order);
  for (auto _ : state) benchmark::DoNotOptimize(f / g);
}
BENCHMARK(BM_Divide)->RangeMultiplier(2)->Range(16, 128);

}  // namespace
