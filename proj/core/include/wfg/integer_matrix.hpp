#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace wfg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<mpz_class>& entries() const noexcept { return entries_; }

  IntegerMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  // Elementary operations; each is invertible over Z.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, const mpz_class& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const mpz_class& factor);

  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y);
  friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination. Square only.
mpz_class determinant(const IntegerMatrix& m);

// Rank over Q.
std::size_t rank(const IntegerMatrix& m);

}  // namespace wfg
