#pragma once

#include <cstdint>
#include <vector>

namespace wfg {

// Möbius function. Throws NonPositive for n < 1.
int mobius(std::int64_t n);

// Positive divisors of n in ascending order, n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace wfg
