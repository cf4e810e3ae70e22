#pragma once

// Integer roots and exact power comparisons. Every result here is certified
// by exact integer arithmetic; floating point is only used to seed Newton.

#include "logcert/exact/bigint.hpp"
#include "logcert/exact/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace logcert {

/// floor(x^(1/n)), certified by r^n <= x < (r+1)^n.
/// Throws std::domain_error for x < 0 or n == 0.
BigInt int_nth_root(const BigInt& x, std::uint64_t n);

inline BigInt isqrt(const BigInt& x) { return int_nth_root(x, 2); }

/// floor(10^scale * x^(1/n)) for rational x >= 0.
BigInt floor_root_scaled(const BigRational& x, std::uint64_t n, std::uint64_t scale);

/// x^(1/n) rounded half away from zero to `digits` fractional digits.
/// Requires x >= 1 and digits >= 1.
std::string nth_root_decimal(const BigInt& x, std::uint64_t n, int digits);

/// Orders a^p against b^q for a, b >= 1. Bit-length bounds settle most
/// calls; otherwise both powers are formed exactly.
std::strong_ordering pow_cmp(const BigInt& a, std::uint64_t p, const BigInt& b, std::uint64_t q);

}  // namespace logcert
