#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace wfg {

inline constexpr std::size_t kDefaultSeriesOrder = 16;

/// Power series c0 + c1 x + ... + cN x^N with exact rational coefficients,
/// truncated at order N.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order = kDefaultSeriesOrder);
  explicit RationalSeries(std::vector<mpq_class> coefficients);

  static RationalSeries constant(const mpq_class& c, std::size_t order);
  // x itself.
  static RationalSeries variable(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const mpq_class& operator[](std::size_t n) const { return coeffs_[n]; }
  mpq_class& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  RationalSeries derivative() const;  // same order, top coefficient 0

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& operator-=(const RationalSeries& o);
  RationalSeries& operator*=(const mpq_class& s);

  friend RationalSeries operator+(RationalSeries x, const RationalSeries& y) { return x += y; }
  friend RationalSeries operator-(RationalSeries x, const RationalSeries& y) { return x -= y; }
  friend RationalSeries operator*(RationalSeries x, const mpq_class& s) { return x *= s; }
  friend bool operator==(const RationalSeries& x, const RationalSeries& y) { return x.coeffs_ == y.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<mpq_class> coeffs_;
};

/// (1 - x)^(-m): coefficient n is C(n+m-1, m-1); the constant 1 for m = 0.
RationalSeries binomial_series(std::size_t m, std::size_t order);

/// (1 - x)^d, a polynomial of degree d truncated at `order`.
RationalSeries one_minus_x_power(std::size_t d, std::size_t order);

/// Truncated Cauchy product. Throws OrderMismatch on differing orders.
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);

/// log(1 - u) = -sum_{k>=1} u^k / k. Throws NonzeroConstantTerm if u(0) != 0.
RationalSeries series_log1m(const RationalSeries& u);

}  // namespace wfg
