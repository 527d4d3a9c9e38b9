#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "wfg/abelian_group.hpp"
#include "wfg/error.hpp"
#include "wfg/presentation.hpp"

using namespace wfg;
using namespace wfg::test;

namespace {

Word word(std::initializer_list<std::pair<std::size_t, std::int64_t>> syllables) {
  Word w;
  for (auto [g, e] : syllables) w.append(g, e);
  return w;
}

AbelianGroup abelian(const Presentation& p) {
  return abelian_group_from_matrix(abelianized_relation_matrix(p), p.generators.size());
}

}  // namespace

TEST_CASE("words stay freely reduced") {
  Word w;
  w.append(0, 2);
  w.append(0, -2);
  REQUIRE(w.empty());
  w.append(1, 3);
  w.append(1, 0);
  w.append(2, 1);
  w.append(2, 4);
  REQUIRE(w.syllables() == std::vector<Syllable>{{1, 3}, {2, 5}});
  REQUIRE(w.exponent_sum(2) == 5);
  REQUIRE(Word({{0, 1}, {0, -1}, {1, 2}}) == word({{1, 2}}));
}

TEST_CASE("present figure 1 keeps only the tree relators") {
  const auto p = present(circle(2, 7, 4));
  REQUIRE(p.generators == std::vector<std::string>{"g01", "g02", "g12"});
  REQUIRE(p.relators == std::vector<Word>{word({{0, 2}}), word({{2, 4}})});
  REQUIRE(to_text(p) == "⟨ g01, g02, g12 | g01^2, g12^4 ⟩");
}

TEST_CASE("present the filled simplex with unit weights") {
  const auto p = present(filled_simplex(1, 1, 1));
  REQUIRE(p.relators == std::vector<Word>{word({{0, 1}}), word({{2, 1}}), word({{1, -1}, {0, 1}, {2, 1}})});
  REQUIRE(to_text(p.relators[2], p.generators) == "g02^-1 g01 g12");
}

TEST_CASE("present a single weighted edge") {
  WeightedComplex k;
  k.vertices = {"v0", "v1"};
  k.edges = {{0, 1, 3}};
  k.tree = std::vector<EdgeKey>{{0, 1}};
  const auto p = present(k);
  REQUIRE(p.generators == std::vector<std::string>{"g01"});
  REQUIRE(p.relators == std::vector<Word>{word({{0, 3}})});
}

TEST_CASE("present drops empty relators and needs a tree") {
  const auto p = present(circle(0, 1, 2));
  REQUIRE(p.relators == std::vector<Word>{word({{2, 2}})});
  auto k = circle(1, 1, 1);
  k.tree.reset();
  REQUIRE_THROWS_AS(present(k), Error);
}

TEST_CASE("generator labels use an underscore beyond ten vertices") {
  WeightedComplex k = path_graph(12);
  REQUIRE(generator_label(k, {3, 4}) == "g3_4");
  REQUIRE(generator_label(path_graph(3), {1, 2}) == "g12");
}

TEST_CASE("simplify the unit filled simplex to the empty presentation") {
  const auto p = simplify(present(filled_simplex(1, 1, 1)));
  REQUIRE(p.generators.empty());
  REQUIRE(p.relators.empty());
  REQUIRE(to_text(p) == "⟨ | ⟩");
}

TEST_CASE("simplify leaves a proper power alone") {
  Presentation p{{"g01"}, {word({{0, 2}})}};
  REQUIRE(simplify(p) == p);
  REQUIRE(simplify(Presentation{}) == Presentation{});
}

TEST_CASE("abelianized relation matrix rows are exponent sums") {
  const auto m = abelianized_relation_matrix(present(circle(2, 1, 4)));
  REQUIRE(m == IntegerMatrix{{2, 0, 0}, {0, 0, 4}});

  Presentation tri{{"g01", "g02", "g12"}, {word({{1, -1}, {0, 1}, {2, 1}})}};
  REQUIRE(abelianized_relation_matrix(tri) == IntegerMatrix{{1, -1, 1}});

  Presentation abc{{"a", "b", "c"}, {word({{0, -2}, {1, 2}, {2, 2}})}};
  REQUIRE(abelianized_relation_matrix(abc) == IntegerMatrix{{-2, 2, 2}});
}

TEST_CASE("property: generator and relator counts", "[property]") {
  Rng rng(0x5EED0101);
  for (int trial = 0; trial < 250; ++trial) {
    const auto k = random_complex(rng);
    const auto p = present(k);
    REQUIRE(p.generators.size() == k.edges.size());
    std::size_t expected = 0;
    for (const auto& e : *k.tree)
      if (*k.weight(e.a, e.b) != 0) ++expected;
    for (const auto& t : k.triangles) {
      Word w;
      w.append(*k.find_edge(t.a, t.b), -*k.weight(t.a, t.b));
      w.append(*k.find_edge(t.a, t.v), *k.weight(t.a, t.v));
      w.append(*k.find_edge(t.v, t.b), *k.weight(t.v, t.b));
      if (!w.empty()) ++expected;
    }
    REQUIRE(p.relators.size() == expected);
    for (const auto& r : p.relators) {
      REQUIRE_FALSE(r.empty());
      for (std::size_t i = 0; i < r.size(); ++i) {
        REQUIRE(r.syllables()[i].exponent != 0);
        REQUIRE(r.syllables()[i].generator < p.generators.size());
        if (i > 0) REQUIRE(r.syllables()[i].generator != r.syllables()[i - 1].generator);
      }
    }
  }
}

TEST_CASE("property: simplify preserves the abelian group", "[property]") {
  Rng rng(0x5EED0102);
  GraphShape shape;
  shape.min_weight = -2;
  shape.max_weight = 2;
  for (int trial = 0; trial < 250; ++trial) {
    const auto p = present(random_complex(rng, shape));
    const auto s = simplify(p);
    REQUIRE(s.generators.size() <= p.generators.size());
    REQUIRE(abelian(s) == abelian(p));
  }
}
