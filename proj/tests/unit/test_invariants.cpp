#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wfg/error.hpp"
#include "wfg/invariants.hpp"

using namespace wfg;
using namespace wfg::test;

namespace {

CyclicFactorization fact(std::vector<std::uint64_t> orders) { return {std::move(orders)}; }

// Classification of a weighted graph read straight off its tree.
CyclicFactorization graph_formula(const WeightedComplex& k) {
  std::vector<std::uint64_t> orders(k.edges.size() + 1 - k.vertices.size(), 0);
  for (const auto& e : *k.tree) {
    const auto w = static_cast<std::uint64_t>(std::llabs(*k.weight(e.a, e.b)));
    if (w != 1) orders.push_back(w);
  }
  std::sort(orders.begin(), orders.end());
  return {orders};
}

}  // namespace

TEST_CASE("normalize factorization") {
  const std::vector<std::int64_t> a{2, -4, 1}, b{}, c{0, 0, -1};
  REQUIRE(normalize_factorization(a) == fact({2, 4}));
  REQUIRE(normalize_factorization(b).is_trivial());
  REQUIRE(normalize_factorization(c) == fact({0, 0}));
}

TEST_CASE("factorization rendering") {
  REQUIRE(fact({0, 2, 4}).to_string() == "Z * Z/2 * Z/4");
  REQUIRE(fact({}).to_string() == "1");
  REQUIRE(fact({0, 0, 2}).free_factor_count() == 2);
}

TEST_CASE("exactly-two condition") {
  REQUIRE(satisfies_exactly_two(circle(2, 1, 4)));
  REQUIRE(satisfies_exactly_two(filled_simplex(1, 1, 1)));
  const auto fig3 = load_figure("figure3.json");
  REQUIRE_FALSE(satisfies_exactly_two(fig3));
  REQUIRE(exactly_two_violation(fig3) == Triangle{1, 3, 4});
  auto no_tree = circle(1, 1, 1);
  no_tree.tree.reset();
  REQUIRE_THROWS_AS(satisfies_exactly_two(no_tree), Error);
}

TEST_CASE("classify the figure complexes") {
  REQUIRE(classify(load_figure("figure1.json")) == fact({0, 2, 4}));
  REQUIRE(classify(circle(2, 11, 4)) == fact({0, 2, 4}));
  REQUIRE(classify(filled_simplex(1, 1, 1)).is_trivial());
  REQUIRE(classify(filled_simplex(2, -3, 5)) == fact({2, 3, 5}));
  REQUIRE(classify(filled_simplex(2, 1, -1)) == fact({2}));

  const auto hexagon = load_figure("figure6-hexagon.json");
  REQUIRE(classify(hexagon) == fact({0, 2, 2, 2}));
}

TEST_CASE("classify refuses figure 3 and names the triangle") {
  try {
    classify(load_figure("figure3.json"));
    FAIL("expected ConditionFailed");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::ConditionFailed);
    REQUIRE(std::string(e.what()).find("(v1,v3,v4)") != std::string::npos);
  }
}

TEST_CASE("realize builds a wedge") {
  const auto k = realize(fact({2, 3}));
  REQUIRE(k.vertices.size() == 3);
  REQUIRE(k.edges == std::vector<Edge>{{0, 1, 2}, {0, 2, 3}});
  REQUIRE(*k.tree == std::vector<EdgeKey>{{0, 1}, {0, 2}});

  const auto point = realize(fact({}));
  REQUIRE(point.vertices.size() == 1);
  REQUIRE(point.edges.empty());

  const auto z = realize(fact({0}));
  REQUIRE(z.edges == std::vector<Edge>{{0, 1, 0}});
  REQUIRE(classify(z) == fact({0}));
}

TEST_CASE("abelianization examples") {
  const auto g1 = abelianization(circle(2, 1, 4));
  REQUIRE(g1 == AbelianGroup{1, {2, 4}});

  const auto g3 = abelianization(load_figure("figure3.json"));
  REQUIRE(g3.free_rank == 2);
  REQUIRE(g3.torsion == std::vector<mpz_class>{2, 2, 2, 2, 2});

  REQUIRE(abelianization(filled_simplex(1, 1, 1)).is_trivial());
  REQUIRE(abelianize(fact({0, 2, 4})) == g1);
}

TEST_CASE("weighted homology of graphs") {
  const auto h = weighted_homology_graph(circle(2, 1, 4));
  REQUIRE(h.h1 == AbelianGroup{1, {}});
  REQUIRE(h.h0 == AbelianGroup{1, {2}});

  const auto unit = weighted_homology_graph(circle(1, 1, 1));
  REQUIRE(unit.h1 == AbelianGroup{1, {}});
  REQUIRE(unit.h0 == AbelianGroup{1, {}});

  WeightedComplex point;
  point.vertices = {"v0"};
  const auto hp = weighted_homology_graph(point);
  REQUIRE(hp.h1.is_trivial());
  REQUIRE(hp.h0 == AbelianGroup{1, {}});

  REQUIRE_THROWS_AS(weighted_homology_graph(filled_simplex(1, 1, 1)), Error);
  REQUIRE_THROWS_AS(weighted_homology_graph(circle(0, 1, 1)), Error);
}

TEST_CASE("lower central ranks") {
  const auto r = lcs_free_ranks(fact({0, 0, 2}), 2);
  REQUIRE(r.at(1) == 2);
  REQUIRE(r.at(2) == 1);

  const auto free2 = lcs_free_ranks(fact({0, 0}), 4);
  REQUIRE(free2.at(2) == 1);
  REQUIRE(free2.at(3) == 2);
  REQUIRE(free2.at(4) == 3);

  const auto z2 = lcs_free_ranks(fact({2}), 6);
  for (std::size_t n = 1; n <= 6; ++n) REQUIRE(z2.at(n) == 0);

  REQUIRE_THROWS_AS(lcs_free_ranks(fact({0, 0}), 8, 4), Error);
}

TEST_CASE("witt rank") {
  REQUIRE(witt_rank(2, 2) == 1);
  REQUIRE(witt_rank(3, 3) == 8);
  for (std::uint64_t n = 2; n <= 8; ++n) REQUIRE(witt_rank(1, n) == 0);
  REQUIRE(witt_rank(5, 1) == 5);
}

TEST_CASE("witt rank counts Lyndon words", "[property]") {
  for (std::uint64_t m = 1; m <= 4; ++m)
    for (std::uint64_t n = 1; n <= 7; ++n) REQUIRE(witt_rank(m, n) == count_lyndon_words(m, n));
}

TEST_CASE("property: lcs ranks of free groups follow the necklace count", "[property]") {
  for (std::uint64_t m = 1; m <= 4; ++m) {
    const auto r = lcs_free_ranks(CyclicFactorization{std::vector<std::uint64_t>(m, 0)}, 8);
    REQUIRE(r.at(1) == m);
    for (std::uint64_t n = 2; n <= 8; ++n) REQUIRE(r.at(n) == witt_rank(m, n));
  }
}

TEST_CASE("property: sign flips do not change classify", "[property]") {
  Rng rng(0x1A7A0001);
  for (int trial = 0; trial < 250; ++trial) {
    const auto k = random_exactly_two_complex(rng);
    auto flipped = k;
    for (auto& e : flipped.edges)
      if (std::bernoulli_distribution(0.5)(rng)) e.w = -e.w;
    REQUIRE(classify(flipped) == classify(k));
  }
}

TEST_CASE("property: all-±1 weights reduce to all-1 weights", "[property]") {
  Rng rng(0x1A7A0002);
  GraphShape shape;
  shape.min_weight = 1;
  shape.max_weight = 1;
  for (int trial = 0; trial < 250; ++trial) {
    const auto unit = random_exactly_two_complex(rng, shape);
    auto signs = unit;
    for (auto& e : signs.edges) e.w = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    const auto c = classify(signs);
    REQUIRE(c == classify(unit));
    // only Z factors survive: the non-tree edges outside triangles
    for (auto o : c.orders) REQUIRE(o == 0);
    REQUIRE(abelianization(signs) == abelianization(unit));
  }
}

TEST_CASE("property: equal weights make classify tree independent", "[property]") {
  Rng rng(0x1A7A0003);
  GraphShape shape;
  shape.max_vertices = 9;
  shape.extra_edge_probability = 0.4;
  for (int trial = 0; trial < 200; ++trial) {
    auto k = random_connected_graph(rng, shape);
    const Weight w = random_weight(rng, -5, 5);
    for (auto& e : k.edges) e.w = w;
    const auto reference = classify(k);
    for (auto s : {TreeStrategy::Bfs, TreeStrategy::KruskalMin, TreeStrategy::KruskalMax})
      REQUIRE(classify(ensure_tree(k, s)) == reference);
    for (int t = 0; t < 20; ++t) REQUIRE(classify(with_tree(k, random_spanning_tree(rng, k))) == reference);
  }
}

TEST_CASE("property: classify of a graph follows the tree formula", "[property]") {
  Rng rng(0x1A7A0004);
  for (int trial = 0; trial < 250; ++trial) {
    auto k = random_connected_graph(rng);
    k = with_tree(k, random_spanning_tree(rng, k));
    REQUIRE(classify(k) == graph_formula(k));
  }
}

TEST_CASE("property: first lcs rank counts Z factors", "[property]") {
  Rng rng(0x1A7A0005);
  GraphShape shape;
  shape.min_weight = -2;
  shape.max_weight = 2;
  for (int trial = 0; trial < 250; ++trial) {
    const auto k = random_connected_graph(rng, shape);
    std::size_t zero_tree = 0;
    for (const auto& e : *k.tree)
      if (*k.weight(e.a, e.b) == 0) ++zero_tree;
    const auto r = lcs_free_ranks(classify(k), 3);
    REQUIRE(r.at(1) == k.edges.size() + 1 - k.vertices.size() + zero_tree);
  }
}

TEST_CASE("property: abelianization agrees with the factorization", "[property]") {
  Rng rng(0x1A7A0006);
  std::size_t triangles = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const auto k = random_exactly_two_complex(rng);
    triangles += k.triangles.size();
    REQUIRE(abelianization(k) == abelianize(classify(k)));
  }
  REQUIRE(triangles > 200);
}

TEST_CASE("property: abelianization is invariant under relabeling", "[property]") {
  Rng rng(0x1A7A0007);
  for (int trial = 0; trial < 250; ++trial) {
    const auto k = random_complex(rng);
    const auto p = random_permutation(rng, k.vertices.size());
    const auto r = relabel(k, p);
    REQUIRE(abelianization(r) == abelianization(k));
    if (satisfies_exactly_two(k)) REQUIRE(classify(r) == classify(k));
  }
}

TEST_CASE("property: classify inverts realize", "[property]") {
  Rng rng(0x1A7A0008);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> raw(uniform(rng, 0, 8));
    for (auto& x : raw) x = random_weight(rng, -12, 12);
    const auto t = normalize_factorization(raw);
    const auto k = realize(t);
    REQUIRE(validate(k).ok());
    REQUIRE(classify(k) == t);
    REQUIRE(abelianization(k) == abelianize(t));
  }
}

TEST_CASE("property: homology of a graph has the expected ranks", "[property]") {
  Rng rng(0x1A7A0009);
  GraphShape shape;
  shape.min_weight = 1;
  shape.max_weight = 4;
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = random_connected_graph(rng, shape);
    const auto h = weighted_homology_graph(k);
    REQUIRE(h.h1.free_rank == k.edges.size() + 1 - k.vertices.size());
    REQUIRE(h.h1.torsion.empty());
    REQUIRE(h.h0.free_rank == 1);
  }
}
