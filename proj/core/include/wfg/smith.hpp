#pragma once

#include "wfg/integer_matrix.hpp"

namespace wfg {

/// U * A * V == D with U, V unimodular and D diagonal, nonnegative,
/// d1 | d2 | ... (zeros last).
struct SnfResult {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  std::vector<mpz_class> diagonal() const;
};

/// Pivot on the smallest nonzero |entry| of the active block (row-major
/// first on ties), clear its row and column by Euclidean steps, then fold
/// in any entry the pivot does not divide.
SnfResult smith_normal_form(const IntegerMatrix& a);

}  // namespace wfg
