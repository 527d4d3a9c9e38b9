#include "wfg/analysis.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "wfg/error.hpp"

namespace wfg {

namespace {

struct StageResult {
  CyclicFactorization factors;
  bool abelian = false;
};

CyclicFactorization as_multiset(const AbelianGroup& g) {
  CyclicFactorization f;
  f.orders.assign(g.free_rank, 0);
  for (const auto& d : g.torsion) f.orders.push_back(d.get_ui());
  std::sort(f.orders.begin(), f.orders.end());
  return f;
}

StageResult classify_stage(const WeightedComplex& stage, std::size_t index, bool fallback) {
  const auto k = ensure_tree(stage, TreeStrategy::Given);
  require_valid(k);
  if (satisfies_exactly_two(k)) return {classify(k), false};
  if (!fallback) {
    try {
      classify(k);
    } catch (const Error& e) {
      throw Error(ErrorKind::ConditionFailed, "stage " + std::to_string(index) + ": " + e.what());
    }
  }
  return {as_multiset(abelianization(k)), true};
}

// Multiset difference x \ y of two sorted order lists.
std::vector<std::uint64_t> difference(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
  std::vector<std::uint64_t> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string to_string(EventKind kind) { return kind == EventKind::Birth ? "birth" : "death"; }

FiltrationReport analyze_filtration(const Filtration& f, const FiltrationOptions& options) {
  for (std::size_t i = 0; i + 1 < f.stages.size(); ++i) {
    if (!is_weighted_inclusion(f.stages[i], f.stages[i + 1])) {
      throw Error(ErrorKind::NotAFiltration, "stage " + std::to_string(i) + " is not a weighted subcomplex of stage " +
                                                 std::to_string(i + 1));
    }
  }

  std::vector<std::future<StageResult>> pending;
  pending.reserve(f.stages.size());
  for (std::size_t i = 0; i < f.stages.size(); ++i) {
    pending.push_back(std::async(std::launch::async, classify_stage, std::cref(f.stages[i]), i,
                                 options.fallback_abelian));
  }

  FiltrationReport report;
  for (auto& p : pending) {
    auto r = p.get();
    report.stage_factors.push_back(std::move(r.factors));
    report.stage_used_abelianization.push_back(r.abelian);
    report.warning = report.warning || r.abelian;
  }

  auto region_of = [&](std::uint64_t m) -> std::string {
    if (m == 0) return "unknown";
    auto it = f.regions.find(m);
    return it == f.regions.end() ? "unknown" : it->second;
  };
  for (std::size_t i = 1; i < report.stage_factors.size(); ++i) {
    const auto& before = report.stage_factors[i - 1].orders;
    const auto& after = report.stage_factors[i].orders;
    for (auto m : difference(before, after)) report.events.push_back({i, EventKind::Death, m, region_of(m)});
    for (auto m : difference(after, before)) report.events.push_back({i, EventKind::Birth, m, region_of(m)});
  }
  return report;
}

std::vector<BirthDeathEvent> filtration_events(const Filtration& f, const FiltrationOptions& options) {
  return analyze_filtration(f, options).events;
}

std::vector<SpanningTree> enumerate_hamiltonian_trees(const WeightedComplex& complex) {
  if (!complex.triangles.empty()) throw Error(ErrorKind::NotAGraph, "Hamiltonian enumeration needs a graph");
  const std::size_t n = complex.vertices.size();
  if (n > kMaxHamiltonianVertices) {
    throw Error(ErrorKind::TooLarge, "Hamiltonian enumeration is limited to " +
                                         std::to_string(kMaxHamiltonianVertices) + " vertices, got " +
                                         std::to_string(n));
  }
  if (n == 0) return {};

  std::vector<std::vector<VertexIndex>> adj(n);
  for (const auto& e : complex.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::set<std::vector<EdgeKey>> found;
  std::vector<VertexIndex> path;
  std::vector<bool> used(n, false);

  auto record = [&] {
    std::vector<EdgeKey> edges;
    for (std::size_t i = 1; i < path.size(); ++i) {
      const auto x = path[i - 1], y = path[i];
      edges.push_back(x < y ? EdgeKey{x, y} : EdgeKey{y, x});
    }
    std::sort(edges.begin(), edges.end());
    found.insert(std::move(edges));
  };

  auto extend = [&](auto&& self) -> void {
    if (path.size() == n) {
      // Each undirected path is reached from both ends; keep one.
      if (path.front() <= path.back()) record();
      return;
    }
    for (auto u : adj[path.back()]) {
      if (used[u]) continue;
      used[u] = true;
      path.push_back(u);
      self(self);
      path.pop_back();
      used[u] = false;
    }
  };

  for (VertexIndex start = 0; start < n; ++start) {
    used[start] = true;
    path.assign(1, start);
    extend(extend);
    used[start] = false;
  }

  std::vector<SpanningTree> out;
  out.reserve(found.size());
  for (const auto& edges : found) out.push_back({edges, TreeStrategy::Given});
  return out;
}

std::string to_string(const TreeInvariant& inv) {
  return std::visit([](const auto& g) { return g.to_string(); }, inv);
}

TreeDiscriminationReport discriminate_trees(const WeightedComplex& complex, const std::vector<SpanningTree>& trees) {
  TreeDiscriminationReport report;
  report.trees = trees;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!is_maximal_tree(complex, trees[i].edges)) {
      throw Error(ErrorKind::BadTree, "candidate tree #" + std::to_string(i) + " is not a maximal tree");
    }
    const auto k = with_tree(complex, trees[i].edges);
    if (satisfies_exactly_two(k)) {
      report.invariants.emplace_back(classify(k));
    } else {
      report.invariants.emplace_back(abelianization(k));
    }
  }
  for (std::size_t i = 1; i < report.invariants.size(); ++i) {
    if (!(report.invariants[i] == report.invariants[0])) report.distinguishable = true;
  }
  return report;
}

WeightedComplex ring_graph(const std::vector<Weight>& weights, const std::string& prefix, std::size_t first) {
  WeightedComplex k;
  const std::size_t n = weights.size();
  for (std::size_t i = 0; i < n; ++i) k.vertices.push_back(prefix + std::to_string(first + i));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    k.edges.push_back({std::min(i, j), std::max(i, j), weights[i]});
  }
  return k.canonical();
}

FullereneDemo fullerene_ring_demo() {
  FullereneDemo demo;
  // v0..v4; the bond v4-v0 is left out of the tree.
  demo.pentagon = ring_graph({1, 1, 1, 1, 1}, "v", 0);
  demo.pentagon = with_tree(demo.pentagon, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});

  // v5..v10 at positions 0..5; double bonds v5v6, v7v8, v9v10; v10-v5 is
  // the bond outside the tree.
  demo.hexagon = ring_graph({2, 1, 2, 1, 2, 1}, "v", 5);
  demo.hexagon = with_tree(demo.hexagon, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});

  demo.pentagon_group = classify(demo.pentagon);
  demo.hexagon_group = classify(demo.hexagon);
  demo.distinguishable = !(demo.pentagon_group == demo.hexagon_group);
  return demo;
}

}  // namespace wfg
