#include <benchmark/benchmark.h>

#include <random>

#include "wfg/series.hpp"
#include "wfg/smith.hpp"

namespace {

wfg::IntegerMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-20, 20);
  wfg::IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(wfg::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_SeriesLog(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  wfg::RationalSeries u(order);
  for (std::size_t n = 1; n <= order; ++n) u[n] = static_cast<long>(n) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(wfg::series_log1m(u));
}
BENCHMARK(BM_SeriesLog)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
