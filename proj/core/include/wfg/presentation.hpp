#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wfg/complex.hpp"
#include "wfg/integer_matrix.hpp"

namespace wfg {

struct Syllable {
  std::size_t generator = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Word in the free group, kept freely reduced: no zero exponents and no two
/// adjacent syllables on the same generator.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t size() const noexcept { return syllables_.size(); }

  void append(std::size_t generator, std::int64_t exponent);
  std::int64_t exponent_sum(std::size_t generator) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// "g01" style label for edge ab of `complex`.
std::string generator_label(const WeightedComplex& complex, EdgeKey edge);

/// One generator per edge a<b, in the complex's edge order. Relators:
/// g_ab^w(ab) for each tree edge and g_ab^-w(ab) g_av^w(av) g_vb^w(vb) for
/// each triangle avb. Relators that reduce to the empty word are dropped.
/// Throws MissingTree.
Presentation present(const WeightedComplex& complex);

/// Safe Tietze moves to a fixed point: drop empty relators and eliminate
/// any generator that forms a whole relator with exponent ±1.
Presentation simplify(const Presentation& p);

/// Exponent-sum matrix: one row per relator, one column per generator.
IntegerMatrix abelianized_relation_matrix(const Presentation& p);

// "⟨ g01, g02, g12 | g01^2, g12^4 ⟩"
std::string to_text(const Presentation& p);
std::string to_text(const Word& w, const std::vector<std::string>& generators);

}  // namespace wfg
