#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wfg {

using VertexIndex = std::size_t;
using Weight = std::int64_t;

// Unordered 1-simplex stored with a < b.
struct EdgeKey {
  VertexIndex a = 0;
  VertexIndex b = 0;

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct Edge {
  VertexIndex a = 0;
  VertexIndex b = 0;
  Weight w = 1;

  EdgeKey key() const noexcept { return {a, b}; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// 2-simplex avb with a < v < b.
struct Triangle {
  VertexIndex a = 0;
  VertexIndex v = 0;
  VertexIndex b = 0;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// A weighted simplicial complex of dimension at most 2 together with an
/// optional maximal tree. Vertex order is the order of `vertices`; every
/// index refers to a position in that list.
struct WeightedComplex {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  std::optional<std::vector<EdgeKey>> tree;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  bool has_tree() const noexcept { return tree.has_value(); }
  bool is_graph() const noexcept { return triangles.empty(); }

  // Position of edge {a,b} in `edges` (either orientation), if present.
  std::optional<std::size_t> find_edge(VertexIndex a, VertexIndex b) const;
  std::optional<Weight> weight(VertexIndex a, VertexIndex b) const;
  bool in_tree(EdgeKey key) const;

  // Edges, triangles and tree keys sorted; does not deduplicate.
  WeightedComplex canonical() const;

  friend bool operator==(const WeightedComplex&, const WeightedComplex&) = default;
};

enum class TreeStrategy { Given, Bfs, KruskalMin, KruskalMax };

std::string to_string(TreeStrategy s);
TreeStrategy tree_strategy_from_string(const std::string& name);

struct SpanningTree {
  std::vector<EdgeKey> edges;  // sorted
  TreeStrategy strategy = TreeStrategy::Given;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

struct Violation {
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has_rule(const std::string& rule) const;
  void add(std::string rule, std::string message);
  void merge(const ValidationReport& other, const std::string& prefix = {});
};

/// Reports every violated invariant: index ranges and orientation, duplicate
/// simplices or labels, face closure, path-connectedness of the 1-skeleton
/// and, when a tree is present, that it is a maximal tree.
ValidationReport validate(const WeightedComplex& complex);

// Throws Error(InvalidComplex) listing the violations when validation fails.
void require_valid(const WeightedComplex& complex);

// True iff `tree` is a cycle-free connected subgraph of the complex touching
// every vertex.
bool is_maximal_tree(const WeightedComplex& complex, std::span<const EdgeKey> tree);

bool is_connected(const WeightedComplex& complex);

/// Maximal tree of the 1-skeleton. `Given` returns the complex's own tree.
/// Bfs starts at vertex 0 and visits neighbours in ascending order; the
/// Kruskal variants order edges by |w| (ascending / descending) with (a,b)
/// as tie-break. Throws NotConnected on a disconnected 1-skeleton.
SpanningTree compute_maximal_tree(const WeightedComplex& complex, TreeStrategy strategy);

WeightedComplex with_tree(WeightedComplex complex, std::vector<EdgeKey> tree);

// Returns the complex with its tree replaced by the one `strategy` builds,
// or unchanged when strategy is Given and a tree is present.
WeightedComplex ensure_tree(const WeightedComplex& complex, TreeStrategy strategy);

/// `permutation[i]` is the new position of old vertex i.
/// Throws BadPermutation if it is not a bijection on the vertex positions.
WeightedComplex relabel(const WeightedComplex& complex, std::span<const std::size_t> permutation);

/// Weighted-subcomplex relation, matched by vertex label: inner's labels
/// must occur in outer in the same relative order, every simplex of inner
/// must be in outer with the same weight and inner's tree must lie in
/// outer's tree. Throws MissingTree if either tree is absent.
bool is_weighted_subcomplex(const WeightedComplex& inner, const WeightedComplex& outer);

// Same check without the tree clause; used where trees need not nest.
bool is_weighted_inclusion(const WeightedComplex& inner, const WeightedComplex& outer);

// Positions of inner's vertices inside outer by label, or nullopt if some
// label is missing.
std::optional<std::vector<VertexIndex>> embed_vertices(const WeightedComplex& inner,
                                                       const WeightedComplex& outer);

}  // namespace wfg
