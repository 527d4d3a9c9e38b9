#include "wfg/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace wfg {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [t.., t..]; row-major first wins ties.
std::optional<Position> find_pivot(const IntegerMatrix& d, std::size_t t) {
  std::optional<Position> best;
  mpz_class best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      mpz_class a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace

std::vector<mpz_class> SnfResult::diagonal() const {
  std::vector<mpz_class> diag;
  const std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i) diag.push_back(D(i, i));
  return diag;
}

SnfResult smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SnfResult r{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n)};
  IntegerMatrix& d = r.D;

  // Row operations are mirrored on U, column operations on V, so that
  // U * a * V == d holds throughout.
  auto swap_rows = [&](std::size_t i, std::size_t j) { d.swap_rows(i, j); r.U.swap_rows(i, j); };
  auto swap_cols = [&](std::size_t i, std::size_t j) { d.swap_cols(i, j); r.V.swap_cols(i, j); };
  auto add_row = [&](std::size_t tgt, std::size_t src, const mpz_class& f) {
    d.add_row_multiple(tgt, src, f);
    r.U.add_row_multiple(tgt, src, f);
  };
  auto add_col = [&](std::size_t tgt, std::size_t src, const mpz_class& f) {
    d.add_col_multiple(tgt, src, f);
    r.V.add_col_multiple(tgt, src, f);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool done = false;
    while (!done) {
      const auto pivot = find_pivot(d, t);
      if (!pivot) return r;  // remaining block is zero
      swap_rows(t, pivot->row);
      swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const mpz_class q = d(i, t) / d(t, t);
        add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const mpz_class q = d(t, j) / d(t, t);
        add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < m && !offending_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending_row = i;
            break;
          }
      if (offending_row) {
        add_row(t, *offending_row, 1);
        continue;
      }

      if (d(t, t) < 0) {
        d.negate_row(t);
        r.U.negate_row(t);
      }
      done = true;
    }
  }
  return r;
}

}  // namespace wfg
