#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "wfg/abelian_group.hpp"
#include "wfg/complex.hpp"
#include "wfg/invariants.hpp"
#include "wfg/presentation.hpp"

namespace wfg {

/// Two-piece cover of L. Each piece lists its own vertices, which must be
/// labels of L in L's order; all comparisons go through L's positions.
struct CoverSpec {
  WeightedComplex L;
  WeightedComplex K1;
  WeightedComplex K2;
  WeightedComplex K0;
};

struct LemmaChecks {
  bool union_of_trees = false;         // B == A1 ∪ A2
  bool intersection_of_trees = false;  // A1 ∩ A2 == A0
};

struct CoverCheck {
  ValidationReport report;
  LemmaChecks lemma;

  bool ok() const noexcept { return report.ok(); }
};

/// Edges of L (in L's positions) split into the six classes:
///   0: A0   1: K0 \ A0   2: (K1 \ K0) ∩ A1   3: K1 \ (K0 ∪ A1)
///   4: (K2 \ K0) ∩ A2   5: K2 \ (K0 ∪ A2)
using GeneratorPartition = std::array<std::vector<EdgeKey>, 6>;

struct VanKampenReport {
  CoverCheck hypotheses;
  bool hypotheses_ok = false;
  LemmaChecks lemma;
  GeneratorPartition partition;
  Presentation amalgamated;
  Presentation direct;
  std::optional<AbelianGroup> amalgamated_abelianization;
  std::optional<AbelianGroup> direct_abelianization;
  bool abelianizations_equal = false;
  // (classify(L), factorization predicted from the generator classes) when
  // L meets the exactly-two condition.
  std::optional<std::pair<CyclicFactorization, CyclicFactorization>> factorizations;
};

/// Union, intersection, weighted-subcomplex relations and connectivity of
/// all four pieces, plus the two tree equalities of the subtree lemma.
CoverCheck check_hypotheses(const CoverSpec& spec);

/// Free product of the two piece presentations (K0 generators primed on
/// the K1 side, double-primed on the K2 side) plus g'_ab g''_ab^-1 for every
/// edge of K0. Throws HypothesesFailed.
Presentation amalgamated_presentation(const CoverSpec& spec);

GeneratorPartition generator_partition(const CoverSpec& spec);

/// Builds the amalgamated and direct presentations and compares them by
/// abelianization and, where licensed, by cyclic factorization.
VanKampenReport verify_van_kampen(const CoverSpec& spec);

}  // namespace wfg
