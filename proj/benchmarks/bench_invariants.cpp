#include <benchmark/benchmark.h>

#include "wfg/analysis.hpp"
#include "wfg/invariants.hpp"

namespace {

// Wheel: a hub joined to every vertex of a rim cycle, all triangles filled,
// star tree at the hub so every triangle has two tree edges.
wfg::WeightedComplex wheel(std::size_t rim) {
  wfg::WeightedComplex k;
  k.vertices.push_back("hub");
  for (std::size_t i = 0; i < rim; ++i) k.vertices.push_back("r" + std::to_string(i));
  std::vector<wfg::EdgeKey> tree;
  for (std::size_t i = 1; i <= rim; ++i) {
    k.edges.push_back({0, i, static_cast<wfg::Weight>(i % 5 + 1)});
    tree.push_back({0, i});
  }
  for (std::size_t i = 1; i <= rim; ++i) {
    const std::size_t j = i % rim + 1;
    k.edges.push_back({std::min(i, j), std::max(i, j), 2});
    k.triangles.push_back({0, std::min(i, j), std::max(i, j)});
  }
  k.tree = tree;
  return k.canonical();
}

void BM_Classify(benchmark::State& state) {
  const auto k = wheel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wfg::classify(k));
}
BENCHMARK(BM_Classify)->Arg(8)->Arg(64)->Arg(256);

void BM_Abelianization(benchmark::State& state) {
  const auto k = wheel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wfg::abelianization(k));
}
BENCHMARK(BM_Abelianization)->Arg(8)->Arg(32)->Arg(64);

void BM_LcsRanks(benchmark::State& state) {
  const wfg::CyclicFactorization g{{0, 0, 0, 2, 3}};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wfg::lcs_free_ranks(g, n, n));
}
BENCHMARK(BM_LcsRanks)->Arg(6)->Arg(12)->Arg(16);

void BM_HamiltonianPaths(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  wfg::WeightedComplex k;
  for (std::size_t i = 0; i < n; ++i) k.vertices.push_back("v" + std::to_string(i));
  // cycle plus chords i -> i+2
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t step : {std::size_t{1}, std::size_t{2}}) {
      const std::size_t j = (i + step) % n;
      const auto a = std::min(i, j), b = std::max(i, j);
      if (!k.find_edge(a, b)) k.edges.push_back({a, b, static_cast<wfg::Weight>(step)});
    }
  }
  k = k.canonical();
  for (auto _ : state) benchmark::DoNotOptimize(wfg::enumerate_hamiltonian_trees(k));
}
BENCHMARK(BM_HamiltonianPaths)->Arg(6)->Arg(9)->Arg(12);

}  // namespace
