#include "wfg/invariants.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "wfg/error.hpp"
#include "wfg/number_theory.hpp"
#include "wfg/presentation.hpp"

namespace wfg {

namespace {

std::uint64_t magnitude(std::int64_t w) {
  return w < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(w) : static_cast<std::uint64_t>(w);
}

std::string triangle_name(const WeightedComplex& k, const Triangle& t) {
  return "(" + k.vertices[t.a] + "," + k.vertices[t.v] + "," + k.vertices[t.b] + ")";
}

}  // namespace

std::size_t CyclicFactorization::free_factor_count() const {
  return static_cast<std::size_t>(std::count(orders.begin(), orders.end(), std::uint64_t{0}));
}

std::string CyclicFactorization::to_string() const {
  if (orders.empty()) return "1";
  std::string out;
  for (auto m : orders) {
    if (!out.empty()) out += " * ";
    out += m == 0 ? "Z" : "Z/" + std::to_string(m);
  }
  return out;
}

CyclicFactorization normalize_factorization(std::span<const std::int64_t> raw) {
  CyclicFactorization f;
  for (auto w : raw) {
    const auto m = magnitude(w);
    if (m != 1) f.orders.push_back(m);
  }
  std::sort(f.orders.begin(), f.orders.end());
  return f;
}

std::optional<Triangle> exactly_two_violation(const WeightedComplex& complex) {
  if (!complex.tree) throw Error(ErrorKind::MissingTree, "exactly-two check needs a maximal tree");
  const std::set<EdgeKey> tree(complex.tree->begin(), complex.tree->end());
  for (const auto& t : complex.triangles) {
    const int in_tree = static_cast<int>(tree.contains({t.a, t.b})) + static_cast<int>(tree.contains({t.a, t.v})) +
                        static_cast<int>(tree.contains({t.v, t.b}));
    if (in_tree != 2) return t;
  }
  return std::nullopt;
}

bool satisfies_exactly_two(const WeightedComplex& complex) {
  return !exactly_two_violation(complex).has_value();
}

CyclicFactorization classify(const WeightedComplex& complex) {
  if (auto bad = exactly_two_violation(complex)) {
    throw Error(ErrorKind::ConditionFailed,
                "exactly-two condition fails at triangle " + triangle_name(complex, *bad));
  }
  std::set<EdgeKey> faces;
  for (const auto& t : complex.triangles) {
    faces.insert({t.a, t.v});
    faces.insert({t.v, t.b});
    faces.insert({t.a, t.b});
  }
  const std::set<EdgeKey> tree(complex.tree->begin(), complex.tree->end());
  std::vector<std::int64_t> raw;
  raw.reserve(complex.edges.size());
  for (const auto& e : complex.edges) {
    if (tree.contains(e.key()) || faces.contains(e.key())) {
      raw.push_back(e.w);
    } else {
      raw.push_back(0);
    }
  }
  return normalize_factorization(raw);
}

WeightedComplex realize(const CyclicFactorization& target) {
  WeightedComplex k;
  k.vertices.push_back("v0");
  std::vector<EdgeKey> tree;
  for (std::size_t i = 0; i < target.orders.size(); ++i) {
    const auto m = target.orders[i];
    if (m == 1 || m > static_cast<std::uint64_t>(std::numeric_limits<Weight>::max())) {
      throw Error(ErrorKind::InvalidArgument, "realize: order " + std::to_string(m) + " is not representable");
    }
    k.vertices.push_back("v" + std::to_string(i + 1));
    k.edges.push_back({0, i + 1, static_cast<Weight>(m)});
    tree.push_back({0, i + 1});
  }
  k.tree = std::move(tree);
  return k;
}

AbelianGroup abelianization(const WeightedComplex& complex) {
  const auto p = present(complex);
  return abelian_group_from_matrix(abelianized_relation_matrix(p), p.generators.size());
}

AbelianGroup abelianize(const CyclicFactorization& f) {
  std::vector<mpz_class> orders;
  orders.reserve(f.orders.size());
  for (auto m : f.orders) orders.emplace_back(std::to_string(m));
  return abelian_group_from_cyclic_orders(orders);
}

WeightedHomology weighted_homology_graph(const WeightedComplex& complex) {
  if (!complex.triangles.empty()) {
    throw Error(ErrorKind::HasTriangles, "weighted homology is only available for graphs (no triangles)");
  }
  for (const auto& e : complex.edges) {
    if (e.w == 0) {
      throw Error(ErrorKind::ZeroWeightEdge, "edge (" + complex.vertices[e.a] + "," + complex.vertices[e.b] +
                                                 ") has weight 0");
    }
  }
  // One row per edge: the image w(ab)([b] - [a]) in the vertex basis.
  const std::size_t nv = complex.vertices.size();
  IntegerMatrix boundary_rows(complex.edges.size(), nv);
  for (std::size_t i = 0; i < complex.edges.size(); ++i) {
    const auto& e = complex.edges[i];
    const mpz_class w(static_cast<long>(e.w));
    boundary_rows(i, e.b) += w;
    boundary_rows(i, e.a) -= w;
  }
  WeightedHomology h;
  h.h0 = abelian_group_from_matrix(boundary_rows, nv);
  h.h1.free_rank = complex.edges.size() - rank(boundary_rows);
  return h;
}

LcsRanks lcs_free_ranks(const CyclicFactorization& g, std::size_t max_n, std::size_t order) {
  if (max_n < 1) throw Error(ErrorKind::InvalidArgument, "lcs_free_ranks: max_n must be at least 1");
  if (order < max_n) {
    throw Error(ErrorKind::TruncationTooSmall, "series order " + std::to_string(order) +
                                                   " is below the requested n = " + std::to_string(max_n));
  }
  const std::size_t s = g.orders.size();

  // m_j = number of infinite-order generators among the first j factors.
  std::vector<std::size_t> m(s + 1, 0);
  for (std::size_t j = 1; j <= s; ++j) m[j] = m[j - 1] + (g.orders[j - 1] == 0 ? 1 : 0);
  const std::size_t ms = m[s];

  // (1+z) = 1/(1-x), so (1+z)^k = binomial_series(k) and (1+z)^-d = (1-x)^d.
  RationalSeries bracket = RationalSeries::constant(mpq_class(static_cast<long>(s) - 1), order);
  for (std::size_t j = 1; j <= s; ++j) bracket -= one_minus_x_power(m[j] - m[j - 1], order);
  RationalSeries u = RationalSeries::constant(1, order) + series_mul(binomial_series(ms, order), bracket);

  const RationalSeries log_series = series_log1m(u);
  std::vector<mpq_class> alpha(order + 1);
  for (std::size_t k = 1; k <= order; ++k) alpha[k] = -log_series[k];

  LcsRanks out;
  out.order = order;
  out.ranks.emplace_back(static_cast<unsigned long>(ms));
  for (std::size_t n = 2; n <= max_n; ++n) {
    mpq_class sum = 0;
    for (auto k : divisors(static_cast<std::int64_t>(n))) {
      if (k == 1) continue;
      sum += mobius(static_cast<std::int64_t>(n) / k) * (mpq_class(k) * alpha[static_cast<std::size_t>(k)]);
    }
    sum /= mpq_class(static_cast<unsigned long>(n));
    sum.canonicalize();
    if (sum.get_den() != 1 || sum < 0) {
      throw Error(ErrorKind::NonIntegerRank, "R_" + std::to_string(n) + " evaluated to " + sum.get_str() +
                                                 ", expected a nonnegative integer");
    }
    out.ranks.push_back(sum.get_num());
  }
  return out;
}

mpz_class witt_rank(std::uint64_t m, std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::NonPositive, "witt_rank: n must be positive");
  if (n == 1) return mpz_class(static_cast<unsigned long>(m));
  mpz_class sum = 0;
  mpz_class power;
  const mpz_class base(static_cast<unsigned long>(m));
  for (auto d : divisors(static_cast<std::int64_t>(n))) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n / static_cast<std::uint64_t>(d));
    sum += mu * power;
  }
  return sum / static_cast<unsigned long>(n);
}

}  // namespace wfg
