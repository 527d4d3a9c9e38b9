#include "wfg/presentation.hpp"

#include <algorithm>
#include <limits>

#include "wfg/error.hpp"

namespace wfg {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorKind::InvalidArgument, "exponent overflow while reducing a word");
  }
  return out;
}

std::int64_t checked_neg(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::InvalidArgument, "exponent overflow while negating a weight");
  }
  return -x;
}

}  // namespace

Word::Word(std::vector<Syllable> syllables) {
  for (const auto& s : syllables) append(s.generator, s.exponent);
}

void Word::append(std::size_t generator, std::int64_t exponent) {
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == generator) {
    syllables_.back().exponent = checked_add(syllables_.back().exponent, exponent);
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({generator, exponent});
}

std::int64_t Word::exponent_sum(std::size_t generator) const {
  std::int64_t sum = 0;
  for (const auto& s : syllables_)
    if (s.generator == generator) sum = checked_add(sum, s.exponent);
  return sum;
}

std::string generator_label(const WeightedComplex& complex, EdgeKey edge) {
  if (complex.vertices.size() <= 10) return "g" + std::to_string(edge.a) + std::to_string(edge.b);
  return "g" + std::to_string(edge.a) + "_" + std::to_string(edge.b);
}

Presentation present(const WeightedComplex& complex) {
  if (!complex.tree) throw Error(ErrorKind::MissingTree, "present: the complex has no maximal tree");

  Presentation p;
  p.generators.reserve(complex.edges.size());
  for (const auto& e : complex.edges) p.generators.push_back(generator_label(complex, e.key()));

  auto index_of = [&](VertexIndex a, VertexIndex b) {
    const auto i = complex.find_edge(a, b);
    if (!i) {
      throw Error(ErrorKind::InvalidComplex, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                 ") referenced but not present");
    }
    return *i;
  };

  for (const auto& key : *complex.tree) {
    const auto i = index_of(key.a, key.b);
    Word w;
    w.append(i, complex.edges[i].w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  for (const auto& t : complex.triangles) {
    const auto ab = index_of(t.a, t.b);
    const auto av = index_of(t.a, t.v);
    const auto vb = index_of(t.v, t.b);
    Word w;
    w.append(ab, checked_neg(complex.edges[ab].w));
    w.append(av, complex.edges[av].w);
    w.append(vb, complex.edges[vb].w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

Presentation simplify(const Presentation& input) {
  Presentation p = input;
  for (;;) {
    std::erase_if(p.relators, [](const Word& w) { return w.empty(); });

    auto it = std::find_if(p.relators.begin(), p.relators.end(), [](const Word& w) {
      return w.size() == 1 && (w.syllables()[0].exponent == 1 || w.syllables()[0].exponent == -1);
    });
    if (it == p.relators.end()) return p;

    // The relator says g = 1: delete g everywhere and renumber the rest.
    const std::size_t dead = it->syllables()[0].generator;
    std::vector<Word> next;
    next.reserve(p.relators.size());
    for (const auto& r : p.relators) {
      Word w;
      for (const auto& s : r.syllables()) {
        if (s.generator == dead) continue;
        w.append(s.generator > dead ? s.generator - 1 : s.generator, s.exponent);
      }
      next.push_back(std::move(w));
    }
    p.relators = std::move(next);
    p.generators.erase(p.generators.begin() + static_cast<std::ptrdiff_t>(dead));
  }
}

IntegerMatrix abelianized_relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (const auto& s : p.relators[r].syllables()) {
      if (s.generator >= p.generators.size()) {
        throw Error(ErrorKind::ShapeMismatch, "relator " + std::to_string(r) + " uses generator " +
                                                  std::to_string(s.generator) + " out of range");
      }
      m(r, s.generator) += mpz_class(static_cast<long>(s.exponent));
    }
  }
  return m;
}

std::string to_text(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.generator < generators.size() ? generators[s.generator] : "x" + std::to_string(s.generator);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

std::string to_text(const Presentation& p) {
  std::string out = "⟨ ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i ? ", " : "") + p.generators[i];
  out += p.generators.empty() ? "| " : " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) out += (i ? ", " : "") + to_text(p.relators[i], p.generators);
  out += p.relators.empty() ? "⟩" : " ⟩";
  return out;
}

}  // namespace wfg
