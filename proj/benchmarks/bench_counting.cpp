#include <benchmark/benchmark.h>

#include "catwords/counters.hpp"
#include "catwords/enumerate.hpp"

using namespace catwords;

namespace {

const char* const kPatterns[] = {"2-21", "21-2", "31-2", "11-2", "21-1"};

void BM_Oracle(benchmark::State& state) {
  const auto p = VincularPattern::parse(kPatterns[state.range(0)]);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(n, p));
  state.SetLabel(kPatterns[state.range(0)]);
}
BENCHMARK(BM_Oracle)->ArgsProduct({{0, 1, 2, 3, 4}, {8, 10}})->Unit(benchmark::kMillisecond);

void BM_Recurrence(benchmark::State& state) {
  const auto p = VincularPattern::parse(kPatterns[state.range(0)]);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sequence_by_recurrence(p, n));
  state.SetLabel(kPatterns[state.range(0)]);
}
BENCHMARK(BM_Recurrence)->ArgsProduct({{0, 1, 2, 3, 4}, {12, 24, 40}})->Unit(benchmark::kMicrosecond);

void BM_GenCatalan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto s = gen_catalan(n);
    std::size_t k = 0;
    while (s.next()) ++k;
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_GenCatalan)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace
