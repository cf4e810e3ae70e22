#pragma once

// Decimal rendering of exact values. All routines work from an exact floor
// at a few extra digits, so the rounding (half away from zero) is correct
// rather than merely close.

#include "logcert/exact/bigint.hpp"
#include "logcert/exact/quad.hpp"
#include "logcert/exact/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace logcert {

inline constexpr int kSqrt2GuardDigits = 10;
inline constexpr int kRootGuardDigits = 5;

/// floor(x * 10^k); k may be negative.
BigInt floor_scaled(const BigRational& x, std::int64_t k);
BigInt floor_scaled(const QuadNumber& x, std::int64_t k);

/// Given F = floor(|x| * 10^(d+guard)), returns |x| * 10^d rounded half away from zero.
BigInt round_from_floor(const BigInt& floored, int guard);

/// Renders sign * magnitude / 10^digits with exactly `digits` fractional digits.
std::string format_scaled(const BigInt& magnitude, int digits, bool negative = false);

std::string to_fixed(const BigRational& x, int digits);
/// quad_to_decimal: correctly rounded fixed-point rendering of a + b*sqrt(2).
std::string to_fixed(const QuadNumber& x, int digits);

/// %g-style rendering with `significant` digits and trailing zeros removed,
/// e.g. "-1.5798e8", "6.41905e9", "0.00293164".
std::string to_general(const QuadNumber& x, int significant = 6);

/// Parses "12", "-4.0799", "1.5798e8" into an exact rational.
BigRational parse_decimal(std::string_view text);

}  // namespace logcert
