#include <benchmark/benchmark.h>

#include "egstat/eg.hpp"
#include "egstat/partition.hpp"
#include "egstat/permutation.hpp"
#include "egstat/tableau.hpp"

namespace {

void BM_EgStatisticStaircase(benchmark::State& state) {
  const egstat::Permutation w = egstat::staircase_witness(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(egstat::eg_statistic(w));
}
BENCHMARK(BM_EgStatisticStaircase)->DenseRange(3, 6);

void BM_ReducedWordsLongestElement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> oneline(n);
  for (int i = 0; i < n; ++i) oneline[i] = n - i;
  const egstat::Permutation w0 = egstat::Permutation::from_one_line(oneline);
  for (auto _ : state) benchmark::DoNotOptimize(egstat::reduced_words(w0));
}
BENCHMARK(BM_ReducedWordsLongestElement)->DenseRange(3, 5);

void BM_EnumerateLengthN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(egstat::enumerate_length_n(n));
}
BENCHMARK(BM_EnumerateLengthN)->DenseRange(3, 5);

void BM_EnumerateSytStaircase(benchmark::State& state) {
  const egstat::Partition shape({4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(egstat::enumerate_syt(shape));
}
BENCHMARK(BM_EnumerateSytStaircase);

}  // namespace
