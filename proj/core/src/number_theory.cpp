#include "wfg/number_theory.hpp"

#include <algorithm>
#include <string>

#include "wfg/error.hpp"

namespace wfg {

int mobius(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::NonPositive, "mobius: n must be positive, got " + std::to_string(n));
  int sign = 1;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::NonPositive, "divisors: n must be positive, got " + std::to_string(n));
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace wfg
