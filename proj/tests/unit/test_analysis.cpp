#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wfg/analysis.hpp"
#include "wfg/error.hpp"

using namespace wfg;
using namespace wfg::test;

namespace {

using Multiset = std::map<std::uint64_t, long>;

Multiset counts(const CyclicFactorization& f) {
  Multiset m;
  for (auto o : f.orders) ++m[o];
  return m;
}

std::vector<std::vector<EdgeKey>> edge_sets(const std::vector<SpanningTree>& trees) {
  std::vector<std::vector<EdgeKey>> out;
  for (const auto& t : trees) out.push_back(t.edges);
  std::sort(out.begin(), out.end());
  return out;
}

// Random nested graph filtration: each stage adds vertices and edges.
Filtration random_graph_filtration(Rng& rng) {
  GraphShape shape;
  shape.min_vertices = 2;
  shape.max_vertices = 9;
  shape.min_weight = -4;
  shape.max_weight = 4;
  const auto full = random_connected_graph(rng, shape);
  // stage i keeps vertices [0, n_i) and a growing subset of the edges among them;
  // the attachment tree keeps every prefix connected.
  const std::size_t stages = uniform(rng, 1, 4);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < stages; ++s) sizes.push_back(uniform(rng, 1, full.vertices.size()));
  std::sort(sizes.begin(), sizes.end());
  std::vector<double> keep(full.edges.size());
  for (auto& x : keep) x = std::uniform_real_distribution<double>(0, 1)(rng);

  Filtration f;
  for (std::size_t s = 0; s < stages; ++s) {
    const double threshold = static_cast<double>(s + 1) / static_cast<double>(stages);
    WeightedComplex k;
    k.vertices.assign(full.vertices.begin(), full.vertices.begin() + static_cast<std::ptrdiff_t>(sizes[s]));
    for (std::size_t i = 0; i < full.edges.size(); ++i) {
      const auto& e = full.edges[i];
      if (e.b >= sizes[s]) continue;
      if (keep[i] <= threshold || std::find(full.tree->begin(), full.tree->end(), e.key()) != full.tree->end())
        k.edges.push_back(e);
    }
    if (std::bernoulli_distribution(0.5)(rng)) k.tree = random_spanning_tree(rng, k);
    f.stages.push_back(k);
  }
  f.regions = {{2, "left"}, {3, "right"}};
  return f;
}

}  // namespace

TEST_CASE("figure 5 filtration events") {
  const auto f = load_filtration("figure5-filtration.json");
  const auto report = analyze_filtration(f);
  REQUIRE(report.stage_factors.size() == 3);
  REQUIRE(report.stage_factors[0] == CyclicFactorization{{0, 2, 2}});
  REQUIRE(report.stage_factors[1] == CyclicFactorization{{0, 0, 2, 2, 3, 3}});
  REQUIRE(report.stage_factors[2] == CyclicFactorization{{0, 2, 2, 2, 3, 3}});
  const std::vector<BirthDeathEvent> expected{
      {1, EventKind::Birth, 0, "unknown"},
      {1, EventKind::Birth, 3, "right"},
      {1, EventKind::Birth, 3, "right"},
      {2, EventKind::Death, 0, "unknown"},
      {2, EventKind::Birth, 2, "left"},
  };
  REQUIRE(report.events == expected);
  REQUIRE_FALSE(report.warning);
}

TEST_CASE("constant and single-stage filtrations have no events") {
  const auto k = load_figure("figure1.json");
  REQUIRE(filtration_events(Filtration{{k, k, k}, {}}).empty());
  REQUIRE(filtration_events(Filtration{{k}, {}}).empty());
}

TEST_CASE("filtration errors") {
  const auto k = load_figure("figure1.json");
  const auto bigger = load_figure("figure3.json");
  // stages do not nest: figure 3 has different weights on the shared edges
  REQUIRE_THROWS_AS(analyze_filtration(Filtration{{bigger, k}, {}}), Error);

  const Filtration heavier{{load_figure("figure1-unit.json"), load_figure("figure1.json")}, {}};
  REQUIRE_THROWS_MATCHES(analyze_filtration(heavier), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::NotAFiltration; }));
}

TEST_CASE("fallback to abelianization diffing") {
  auto fig3 = load_figure("figure3.json");
  WeightedComplex start;
  start.vertices = {"v0", "v1"};
  start.edges = {{0, 1, 2}};
  const Filtration f{{start, fig3}, {{2, "left"}}};
  REQUIRE_THROWS_AS(analyze_filtration(f), Error);
  const auto report = analyze_filtration(f, FiltrationOptions{true});
  REQUIRE(report.warning);
  REQUIRE(report.stage_used_abelianization == std::vector<bool>{false, true});
}

TEST_CASE("hamiltonian trees on small graphs") {
  REQUIRE(enumerate_hamiltonian_trees(path_graph(3)).size() == 1);
  REQUIRE(enumerate_hamiltonian_trees(circle(1, 1, 1)).size() == 3);
  const auto cycle = enumerate_hamiltonian_trees(four_cycle());
  REQUIRE(cycle.size() == 4);
  REQUIRE(edge_sets(cycle) == hamiltonian_paths_by_permutation(four_cycle()));
  REQUIRE_THROWS_AS(enumerate_hamiltonian_trees(filled_simplex(1, 1, 1)), Error);
  REQUIRE_THROWS_AS(enumerate_hamiltonian_trees(path_graph(15)), Error);
}

TEST_CASE("discriminate the trees of figure 1 with distinct weights") {
  const auto k = load_figure("figure1-distinct.json");
  const auto report = discriminate_trees(k, enumerate_hamiltonian_trees(k));
  REQUIRE(report.trees.size() == 3);
  std::vector<CyclicFactorization> got;
  for (const auto& inv : report.invariants) got.push_back(std::get<CyclicFactorization>(inv));
  std::sort(got.begin(), got.end(), [](auto& x, auto& y) { return x.orders < y.orders; });
  REQUIRE(got == std::vector<CyclicFactorization>{{{0, 2, 3}}, {{0, 2, 5}}, {{0, 3, 5}}});
  REQUIRE(report.distinguishable);
}

TEST_CASE("equal weights or a single tree are not distinguishable") {
  const auto k = circle(3, 3, 3);
  REQUIRE_FALSE(discriminate_trees(k, enumerate_hamiltonian_trees(k)).distinguishable);
  const auto d = load_figure("figure1-distinct.json");
  const auto one = enumerate_hamiltonian_trees(d);
  REQUIRE_FALSE(discriminate_trees(d, {one.front()}).distinguishable);
  REQUIRE_THROWS_AS(discriminate_trees(d, {SpanningTree{{{0, 1}}, TreeStrategy::Given}}), Error);
}

TEST_CASE("discrimination falls back to the abelianization") {
  const auto fig3 = load_figure("figure3.json");
  const auto report = discriminate_trees(fig3, {SpanningTree{*fig3.tree, TreeStrategy::Given}});
  REQUIRE(std::holds_alternative<AbelianGroup>(report.invariants.front()));
}

TEST_CASE("fullerene ring demo") {
  const auto demo = fullerene_ring_demo();
  REQUIRE(demo.pentagon_group == CyclicFactorization{{0}});
  REQUIRE(demo.hexagon_group == CyclicFactorization{{0, 2, 2, 2}});
  REQUIRE(demo.distinguishable);
  REQUIRE(classify(load_figure("figure6-pentagon.json")) == demo.pentagon_group);
}

TEST_CASE("property: hamiltonian trees are paths through every vertex", "[property]") {
  Rng rng(0xA11A0001);
  GraphShape shape;
  shape.min_vertices = 1;
  shape.max_vertices = 7;
  shape.extra_edge_probability = 0.5;
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = random_connected_graph(rng, shape);
    const auto trees = enumerate_hamiltonian_trees(k);
    for (const auto& t : trees) {
      REQUIRE(is_maximal_tree(k, t.edges));
      std::vector<int> degree(k.vertices.size(), 0);
      for (const auto& e : t.edges) ++degree[e.a], ++degree[e.b];
      REQUIRE(*std::max_element(degree.begin(), degree.end()) <= 2);
    }
    REQUIRE(edge_sets(trees) == hamiltonian_paths_by_permutation(k));
  }
}

TEST_CASE("property: filtration events conserve factor multisets", "[property]") {
  Rng rng(0xA11A0002);
  for (int trial = 0; trial < 250; ++trial) {
    const auto f = random_graph_filtration(rng);
    const auto report = analyze_filtration(f);
    REQUIRE(report.stage_factors.size() == f.stages.size());
    for (std::size_t i = 0; i + 1 < f.stages.size(); ++i) {
      auto m = counts(report.stage_factors[i]);
      for (const auto& e : report.events) {
        if (e.stage != i + 1) continue;
        REQUIRE(e.factor != 1);
        m[e.factor] += e.kind == EventKind::Birth ? 1 : -1;
        if (e.factor == 0) REQUIRE(e.region == "unknown");
        if (e.factor == 2) REQUIRE(e.region == "left");
        if (e.factor == 3) REQUIRE(e.region == "right");
      }
      std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
      REQUIRE(m == counts(report.stage_factors[i + 1]));
    }
  }
}
