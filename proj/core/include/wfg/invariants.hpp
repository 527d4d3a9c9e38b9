#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wfg/abelian_group.hpp"
#include "wfg/complex.hpp"
#include "wfg/series.hpp"

namespace wfg {

/// Free product of cyclic groups, encoded by the sorted multiset of their
/// orders: 0 stands for Z, m >= 2 for Z/m. Order 1 never appears.
struct CyclicFactorization {
  std::vector<std::uint64_t> orders;

  std::size_t free_factor_count() const;
  bool is_trivial() const noexcept { return orders.empty(); }

  // "Z * Z/2 * Z/4", "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const CyclicFactorization&, const CyclicFactorization&) = default;
};

/// Free ranks R_1..R_N of the lower central quotients γn/γn+1.
struct LcsRanks {
  std::vector<mpz_class> ranks;  // ranks[n-1] == R_n
  std::size_t order = 0;         // series truncation used

  const mpz_class& at(std::size_t n) const { return ranks.at(n - 1); }
};

struct WeightedHomology {
  AbelianGroup h0;
  AbelianGroup h1;
};

/// |entry| for each entry, 1s removed, ascending (zeros first).
CyclicFactorization normalize_factorization(std::span<const std::int64_t> raw);

// First triangle violating the exactly-two condition, if any.
std::optional<Triangle> exactly_two_violation(const WeightedComplex& complex);

/// True iff every triangle avb has exactly two of ab, av, vb in the tree.
/// Throws MissingTree.
bool satisfies_exactly_two(const WeightedComplex& complex);

/// Free-product decomposition for complexes meeting the exactly-two
/// condition: tree edges and non-tree faces of triangles contribute
/// Z/|w|, non-tree edges in no triangle contribute Z.
/// Throws ConditionFailed naming the offending triangle.
CyclicFactorization classify(const WeightedComplex& complex);

/// Wedge of one edge per factor at a common base vertex, weight = order,
/// tree = the whole complex.
WeightedComplex realize(const CyclicFactorization& target);

/// Abelianization computed from the exponent-sum matrix of present().
AbelianGroup abelianization(const WeightedComplex& complex);

// Abelian group ⊕ Z/m over the factors, in invariant-factor form.
AbelianGroup abelianize(const CyclicFactorization& f);

/// Weighted homology of a weighted graph with unit vertex weights, where
/// the boundary of [a,b] is w(ab)([b] - [a]). Throws HasTriangles or
/// ZeroWeightEdge.
WeightedHomology weighted_homology_graph(const WeightedComplex& complex);

/// Free ranks of the lower central quotients of a free product of cyclic
/// groups, each factor taken as its own free factor G(i). Builds
///   U(x) = 1 + (1+z)^m_s { (s-1) - sum_j (1+z)^-(m_j - m_{j-1}) },
///   z = x/(1-x),
/// reads alpha_k = -[x^k] log(1 - U) and sums
///   R_n = (1/n) sum_{k|n, k>1} mu(n/k) k alpha_k,   R_1 = m_s.
/// Throws TruncationTooSmall if order < max_n.
LcsRanks lcs_free_ranks(const CyclicFactorization& g, std::size_t max_n,
                        std::size_t order = kDefaultSeriesOrder);

// Necklace count (1/n) sum_{d|n} mu(d) m^(n/d); m for n = 1.
mpz_class witt_rank(std::uint64_t m, std::uint64_t n);

}  // namespace wfg
