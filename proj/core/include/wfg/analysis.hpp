#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wfg/abelian_group.hpp"
#include "wfg/complex.hpp"
#include "wfg/invariants.hpp"

namespace wfg {

/// Nested sequence of weighted complexes. Each stage must be a weighted
/// subcomplex of the next by label, weights and simplices; trees need not
/// nest and a stage without a tree gets the bfs tree.
struct Filtration {
  std::vector<WeightedComplex> stages;
  std::map<std::uint64_t, std::string> regions;  // torsion order -> region label
};

enum class EventKind { Birth, Death };

std::string to_string(EventKind kind);

struct BirthDeathEvent {
  std::size_t stage = 0;
  EventKind kind = EventKind::Birth;
  std::uint64_t factor = 0;  // 0 for Z
  std::string region = "unknown";

  friend bool operator==(const BirthDeathEvent&, const BirthDeathEvent&) = default;
};

struct FiltrationOptions {
  // Diff abelianizations for stages that fail the exactly-two condition
  // instead of throwing.
  bool fallback_abelian = false;
};

struct FiltrationReport {
  std::vector<CyclicFactorization> stage_factors;  // per stage, as multisets
  std::vector<bool> stage_used_abelianization;
  std::vector<BirthDeathEvent> events;
  bool warning = false;  // some stage fell back to abelianization diffing
};

/// Births and deaths are the multiset differences of consecutive stage
/// factorizations. Finite factors take their region from `regions`; Z
/// factors are reported as "unknown". Throws ConditionFailed naming the
/// stage, or NotAFiltration when stages do not nest.
FiltrationReport analyze_filtration(const Filtration& f, const FiltrationOptions& options = {});

// Events only.
std::vector<BirthDeathEvent> filtration_events(const Filtration& f, const FiltrationOptions& options = {});

inline constexpr std::size_t kMaxHamiltonianVertices = 14;

/// Every Hamiltonian path of a graph as its edge set, a path and its
/// reverse counted once, in lexicographic order. Throws NotAGraph or
/// TooLarge.
std::vector<SpanningTree> enumerate_hamiltonian_trees(const WeightedComplex& complex);

using TreeInvariant = std::variant<CyclicFactorization, AbelianGroup>;

std::string to_string(const TreeInvariant& inv);

struct TreeDiscriminationReport {
  std::vector<SpanningTree> trees;
  std::vector<TreeInvariant> invariants;
  bool distinguishable = false;
};

/// Invariant of the complex under each candidate tree: the cyclic
/// factorization when the exactly-two condition holds, else the
/// abelianization. Throws BadTree if a candidate is not a maximal tree.
TreeDiscriminationReport discriminate_trees(const WeightedComplex& complex, const std::vector<SpanningTree>& trees);

// Cycle graph on `weights.size()` vertices named `prefix + (first + i)`;
// edge i joins vertex i and i+1 (mod n) with weight weights[i].
WeightedComplex ring_graph(const std::vector<Weight>& weights, const std::string& prefix = "v",
                           std::size_t first = 0);

struct FullereneDemo {
  WeightedComplex pentagon;
  WeightedComplex hexagon;
  CyclicFactorization pentagon_group;
  CyclicFactorization hexagon_group;
  bool distinguishable = false;
};

/// Pentagon ring with unit bonds against a hexagon ring whose three double
/// bonds carry weight 2, each with the maximal tree that omits one single
/// bond.
FullereneDemo fullerene_ring_demo();

}  // namespace wfg
