#include "wfg/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "wfg/error.hpp"

namespace wfg {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, mpz_class(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(target, k) += factor * (*this)(source, k);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, target) += factor * (*this)(k, source);
}

IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
  if (x.cols_ != y.rows_) {
    throw Error(ErrorKind::ShapeMismatch, "cannot multiply " + std::to_string(x.rows_) + "x" +
                                              std::to_string(x.cols_) + " by " + std::to_string(y.rows_) +
                                              "x" + std::to_string(y.cols_));
  }
  IntegerMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const mpz_class& xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

// Fraction-free elimination in place; returns the rank and the sign of the
// row permutation used.
std::size_t bareiss(IntegerMatrix& m, int& sign) {
  sign = 1;
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        mpz_class v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerMatrix work = m;
  int sign = 1;
  if (bareiss(work, sign) < m.rows()) return 0;
  return sign * work(m.rows() - 1, m.cols() - 1);
}

std::size_t rank(const IntegerMatrix& m) {
  IntegerMatrix work = m;
  int sign = 1;
  return bareiss(work, sign);
}

}  // namespace wfg
