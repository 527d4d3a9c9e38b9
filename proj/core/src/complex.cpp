#include "wfg/complex.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "wfg/error.hpp"

namespace wfg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

std::string edge_name(const WeightedComplex& k, EdgeKey e) {
  auto label = [&](VertexIndex i) {
    return i < k.vertices.size() ? k.vertices[i] : std::to_string(i);
  };
  return "(" + label(e.a) + "," + label(e.b) + ")";
}

// Adjacency lists over in-range edges, neighbours ascending.
std::vector<std::vector<VertexIndex>> adjacency(const WeightedComplex& k) {
  std::vector<std::vector<VertexIndex>> adj(k.vertices.size());
  for (const auto& e : k.edges) {
    if (e.a >= adj.size() || e.b >= adj.size() || e.a == e.b) continue;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& n : adj) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return adj;
}

EdgeKey ordered(VertexIndex x, VertexIndex y) {
  return x < y ? EdgeKey{x, y} : EdgeKey{y, x};
}

}  // namespace

std::optional<std::size_t> WeightedComplex::find_edge(VertexIndex a, VertexIndex b) const {
  const EdgeKey key = ordered(a, b);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].key() == key) return i;
  }
  return std::nullopt;
}

std::optional<Weight> WeightedComplex::weight(VertexIndex a, VertexIndex b) const {
  if (auto i = find_edge(a, b)) return edges[*i].w;
  return std::nullopt;
}

bool WeightedComplex::in_tree(EdgeKey key) const {
  if (!tree) return false;
  return std::find(tree->begin(), tree->end(), key) != tree->end();
}

WeightedComplex WeightedComplex::canonical() const {
  WeightedComplex out = *this;
  std::sort(out.edges.begin(), out.edges.end(),
            [](const Edge& x, const Edge& y) { return x.key() < y.key(); });
  std::sort(out.triangles.begin(), out.triangles.end());
  if (out.tree) std::sort(out.tree->begin(), out.tree->end());
  return out;
}

std::string to_string(TreeStrategy s) {
  switch (s) {
    case TreeStrategy::Given: return "given";
    case TreeStrategy::Bfs: return "bfs";
    case TreeStrategy::KruskalMin: return "kruskal-min";
    case TreeStrategy::KruskalMax: return "kruskal-max";
  }
  return "given";
}

TreeStrategy tree_strategy_from_string(const std::string& name) {
  if (name == "given") return TreeStrategy::Given;
  if (name == "bfs") return TreeStrategy::Bfs;
  if (name == "kruskal-min") return TreeStrategy::KruskalMin;
  if (name == "kruskal-max") return TreeStrategy::KruskalMax;
  throw Error(ErrorKind::InvalidArgument, "unknown tree strategy '" + name + "'");
}

bool ValidationReport::has_rule(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

void ValidationReport::add(std::string rule, std::string message) {
  violations.push_back({std::move(rule), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) add(v.rule, prefix + v.message);
}

bool is_connected(const WeightedComplex& complex) {
  const std::size_t n = complex.vertices.size();
  if (n <= 1) return true;
  const auto adj = adjacency(complex);
  std::vector<bool> seen(n, false);
  std::vector<VertexIndex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

bool is_maximal_tree(const WeightedComplex& complex, std::span<const EdgeKey> tree) {
  const std::size_t n = complex.vertices.size();
  if (n == 0) return tree.empty();
  if (tree.size() != n - 1) return false;
  DisjointSets sets(n);
  for (const auto& e : tree) {
    if (e.a >= n || e.b >= n || e.a >= e.b) return false;
    if (!complex.find_edge(e.a, e.b)) return false;
    if (!sets.unite(e.a, e.b)) return false;
  }
  // n-1 edges without a cycle on n vertices span them.
  return true;
}

ValidationReport validate(const WeightedComplex& complex) {
  ValidationReport report;
  const std::size_t n = complex.vertices.size();

  {
    std::set<std::string> labels;
    for (const auto& v : complex.vertices) {
      if (!labels.insert(v).second) report.add("duplicate-vertex", "vertex label '" + v + "' occurs twice");
    }
  }

  std::set<EdgeKey> edge_keys;
  for (std::size_t i = 0; i < complex.edges.size(); ++i) {
    const auto& e = complex.edges[i];
    const std::string where = "edge #" + std::to_string(i) + " (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    if (e.a >= n || e.b >= n) {
      report.add("vertex-range", where + " references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      continue;
    }
    if (e.a >= e.b) {
      report.add("edge-order", where + " must satisfy a < b");
      continue;
    }
    if (!edge_keys.insert(e.key()).second) report.add("duplicate-edge", where + " is listed twice");
  }

  std::set<Triangle> tri_keys;
  for (std::size_t i = 0; i < complex.triangles.size(); ++i) {
    const auto& t = complex.triangles[i];
    const std::string where = "triangle #" + std::to_string(i) + " (" + std::to_string(t.a) + "," +
                              std::to_string(t.v) + "," + std::to_string(t.b) + ")";
    if (t.a >= n || t.v >= n || t.b >= n) {
      report.add("vertex-range", where + " references a vertex outside the vertex list");
      continue;
    }
    if (!(t.a < t.v && t.v < t.b)) {
      report.add("triangle-order", where + " must satisfy a < v < b");
      continue;
    }
    if (!tri_keys.insert(t).second) report.add("duplicate-triangle", where + " is listed twice");
    for (EdgeKey face : {EdgeKey{t.a, t.v}, EdgeKey{t.v, t.b}, EdgeKey{t.a, t.b}}) {
      if (!edge_keys.contains(face)) {
        report.add("face-closure", where + " is missing its face " + edge_name(complex, face));
      }
    }
  }

  if (!is_connected(complex)) report.add("connected", "the 1-skeleton is not path-connected");

  if (complex.tree) {
    const auto& tree = *complex.tree;
    bool keys_ok = true;
    std::set<EdgeKey> seen;
    for (const auto& e : tree) {
      if (!edge_keys.contains(e)) {
        report.add("tree-edge", "tree edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") is not an edge of the complex");
        keys_ok = false;
      } else if (!seen.insert(e).second) {
        report.add("tree-edge", "tree edge " + edge_name(complex, e) + " is listed twice");
        keys_ok = false;
      }
    }
    if (keys_ok) {
      DisjointSets sets(n);
      bool acyclic = true;
      for (const auto& e : tree) acyclic = sets.unite(e.a, e.b) && acyclic;
      if (!acyclic) report.add("tree-cycle", "tree edges contain a cycle");
      if (acyclic && n > 0 && tree.size() + 1 != n) {
        report.add("tree-spanning", "tree has " + std::to_string(tree.size()) + " edges but a maximal tree needs " +
                                        std::to_string(n - 1));
      }
    }
  }
  return report;
}

void require_valid(const WeightedComplex& complex) {
  const auto report = validate(complex);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "invalid complex:";
  for (const auto& v : report.violations) msg << "\n  [" << v.rule << "] " << v.message;
  throw Error(ErrorKind::InvalidComplex, msg.str());
}

SpanningTree compute_maximal_tree(const WeightedComplex& complex, TreeStrategy strategy) {
  const std::size_t n = complex.vertices.size();
  if (!is_connected(complex)) {
    throw Error(ErrorKind::NotConnected, "cannot build a maximal tree: the 1-skeleton is disconnected");
  }
  SpanningTree result;
  result.strategy = strategy;

  switch (strategy) {
    case TreeStrategy::Given: {
      if (!complex.tree) throw Error(ErrorKind::MissingTree, "complex carries no tree");
      if (!is_maximal_tree(complex, *complex.tree)) {
        throw Error(ErrorKind::BadTree, "the supplied tree is not a maximal tree of the complex");
      }
      result.edges = *complex.tree;
      break;
    }
    case TreeStrategy::Bfs: {
      if (n == 0) break;
      const auto adj = adjacency(complex);
      std::vector<bool> seen(n, false);
      std::queue<VertexIndex> queue;
      queue.push(0);
      seen[0] = true;
      while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop();
        for (auto u : adj[v]) {
          if (seen[u]) continue;
          seen[u] = true;
          result.edges.push_back(ordered(v, u));
          queue.push(u);
        }
      }
      break;
    }
    case TreeStrategy::KruskalMin:
    case TreeStrategy::KruskalMax: {
      std::vector<Edge> sorted = complex.edges;
      const bool descending = strategy == TreeStrategy::KruskalMax;
      auto magnitude = [](Weight w) {
        return w < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(w) : static_cast<std::uint64_t>(w);
      };
      std::stable_sort(sorted.begin(), sorted.end(), [&](const Edge& x, const Edge& y) {
        const auto mx = magnitude(x.w);
        const auto my = magnitude(y.w);
        if (mx != my) return descending ? mx > my : mx < my;
        return x.key() < y.key();
      });
      DisjointSets sets(n);
      for (const auto& e : sorted) {
        if (result.edges.size() + 1 == n) break;
        if (sets.unite(e.a, e.b)) result.edges.push_back(e.key());
      }
      break;
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

WeightedComplex with_tree(WeightedComplex complex, std::vector<EdgeKey> tree) {
  std::sort(tree.begin(), tree.end());
  complex.tree = std::move(tree);
  return complex;
}

WeightedComplex ensure_tree(const WeightedComplex& complex, TreeStrategy strategy) {
  if (strategy == TreeStrategy::Given && complex.tree) return complex;
  const auto s = strategy == TreeStrategy::Given ? TreeStrategy::Bfs : strategy;
  return with_tree(complex, compute_maximal_tree(complex, s).edges);
}

WeightedComplex relabel(const WeightedComplex& complex, std::span<const std::size_t> permutation) {
  const std::size_t n = complex.vertices.size();
  if (permutation.size() != n) {
    throw Error(ErrorKind::BadPermutation, "permutation has " + std::to_string(permutation.size()) +
                                               " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<bool> hit(n, false);
  for (auto p : permutation) {
    if (p >= n || hit[p]) throw Error(ErrorKind::BadPermutation, "permutation is not a bijection");
    hit[p] = true;
  }

  WeightedComplex out;
  out.vertices.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.vertices[permutation[i]] = complex.vertices[i];
  out.edges.reserve(complex.edges.size());
  for (const auto& e : complex.edges) {
    const auto k = ordered(permutation[e.a], permutation[e.b]);
    out.edges.push_back({k.a, k.b, e.w});
  }
  for (const auto& t : complex.triangles) {
    std::array<VertexIndex, 3> c{permutation[t.a], permutation[t.v], permutation[t.b]};
    std::sort(c.begin(), c.end());
    out.triangles.push_back({c[0], c[1], c[2]});
  }
  if (complex.tree) {
    std::vector<EdgeKey> tree;
    for (const auto& e : *complex.tree) tree.push_back(ordered(permutation[e.a], permutation[e.b]));
    out.tree = std::move(tree);
  }
  return out.canonical();
}

std::optional<std::vector<VertexIndex>> embed_vertices(const WeightedComplex& inner,
                                                       const WeightedComplex& outer) {
  std::unordered_map<std::string, VertexIndex> position;
  for (std::size_t i = 0; i < outer.vertices.size(); ++i) position.emplace(outer.vertices[i], i);
  std::vector<VertexIndex> map;
  map.reserve(inner.vertices.size());
  for (const auto& label : inner.vertices) {
    auto it = position.find(label);
    if (it == position.end()) return std::nullopt;
    map.push_back(it->second);
  }
  return map;
}

bool is_weighted_inclusion(const WeightedComplex& inner, const WeightedComplex& outer) {
  const auto map = embed_vertices(inner, outer);
  if (!map) return false;
  // vertex order preserved
  for (std::size_t i = 1; i < map->size(); ++i) {
    if ((*map)[i - 1] >= (*map)[i]) return false;
  }
  for (const auto& e : inner.edges) {
    const auto w = outer.weight((*map)[e.a], (*map)[e.b]);
    if (!w || *w != e.w) return false;
  }
  std::set<Triangle> outer_tris(outer.triangles.begin(), outer.triangles.end());
  for (const auto& t : inner.triangles) {
    if (!outer_tris.contains(Triangle{(*map)[t.a], (*map)[t.v], (*map)[t.b]})) return false;
  }
  return true;
}

bool is_weighted_subcomplex(const WeightedComplex& inner, const WeightedComplex& outer) {
  if (!inner.tree || !outer.tree) {
    throw Error(ErrorKind::MissingTree, "weighted subcomplex test needs trees on both complexes");
  }
  if (!is_weighted_inclusion(inner, outer)) return false;
  const auto map = *embed_vertices(inner, outer);
  for (const auto& e : *inner.tree) {
    if (!outer.in_tree(EdgeKey{map[e.a], map[e.b]})) return false;
  }
  return true;
}

}  // namespace wfg
