#include "wfg/series.hpp"

#include <sstream>

#include "wfg/error.hpp"

namespace wfg {

RationalSeries::RationalSeries(std::size_t order) : coeffs_(order + 1, mpq_class(0)) {}

RationalSeries::RationalSeries(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  for (auto& c : coeffs_) c.canonicalize();
}

RationalSeries RationalSeries::constant(const mpq_class& c, std::size_t order) {
  RationalSeries s(order);
  s[0] = c;
  return s;
}

RationalSeries RationalSeries::variable(std::size_t order) {
  RationalSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

RationalSeries RationalSeries::derivative() const {
  RationalSeries d(order());
  for (std::size_t n = 1; n <= order(); ++n) d[n - 1] = coeffs_[n] * static_cast<unsigned long>(n);
  return d;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  if (o.order() != order()) throw Error(ErrorKind::OrderMismatch, "series orders differ");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) {
  if (o.order() != order()) throw Error(ErrorKind::OrderMismatch, "series orders differ");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const mpq_class& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string RationalSeries::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t n = 0; n < coeffs_.size(); ++n) out << (n ? ", " : "") << coeffs_[n].get_str();
  out << ']';
  return out.str();
}

RationalSeries binomial_series(std::size_t m, std::size_t order) {
  RationalSeries s(order);
  if (m == 0) {
    s[0] = 1;
    return s;
  }
  mpz_class c;
  for (std::size_t n = 0; n <= order; ++n) {
    mpz_bin_uiui(c.get_mpz_t(), n + m - 1, m - 1);
    s[n] = mpq_class(c);
  }
  return s;
}

RationalSeries one_minus_x_power(std::size_t d, std::size_t order) {
  RationalSeries s(order);
  mpz_class c;
  for (std::size_t k = 0; k <= d && k <= order; ++k) {
    mpz_bin_uiui(c.get_mpz_t(), d, k);
    s[k] = mpq_class(k % 2 == 0 ? c : mpz_class(-c));
  }
  return s;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch, "series_mul: orders " + std::to_string(a.order()) + " and " +
                                              std::to_string(b.order()) + " differ");
  }
  RationalSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries series_log1m(const RationalSeries& u) {
  if (u[0] != 0) {
    throw Error(ErrorKind::NonzeroConstantTerm, "series_log1m: constant term is " + u[0].get_str() + ", expected 0");
  }
  const std::size_t order = u.order();
  RationalSeries result(order);
  RationalSeries power = u;  // u^k
  // u^k has valuation >= k, so terms past k = order vanish.
  for (std::size_t k = 1; k <= order; ++k) {
    result -= power * mpq_class(1, static_cast<unsigned long>(k));
    power = series_mul(power, u);
  }
  return result;
}

}  // namespace wfg
