#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "wfg/integer_matrix.hpp"

namespace wfg {

/// Finitely generated abelian group Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk in
/// invariant-factor form: every di >= 2 and di | di+1.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }

  // "Z^2 ⊕ Z/2 ⊕ Z/4", "Z", "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of the relation matrix: Z^n_generators modulo the row space of
/// `relations`. Throws ShapeMismatch if the column count differs.
AbelianGroup abelian_group_from_matrix(const IntegerMatrix& relations, std::size_t n_generators);

/// Direct sum of cyclic groups Z/m (m = 0 meaning Z), brought into
/// invariant-factor form.
AbelianGroup abelian_group_from_cyclic_orders(const std::vector<mpz_class>& orders);

}  // namespace wfg
