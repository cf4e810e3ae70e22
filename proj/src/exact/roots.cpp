#include "logcert/exact/roots.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "logcert/exact/decimal.hpp"

namespace logcert {

namespace {

// A starting point within a relative 1e-12 or so of the true root.
BigInt newton_seed(const BigInt& x, std::uint64_t n) {
  double lg = x.log2_approx() / static_cast<double>(n);
  if (lg < 60.0) {
    return BigInt(static_cast<std::uint64_t>(std::exp2(lg)) + 1U);
  }
  auto shift = static_cast<std::uint64_t>(std::floor(lg)) - 52U;
  double mant = std::exp2(lg - static_cast<double>(shift));
  BigInt top(static_cast<std::uint64_t>(mant) + 1U);
  return top * pow(BigInt(2), shift);
}

}  // namespace

BigInt int_nth_root(const BigInt& x, std::uint64_t n) {
  if (n == 0) throw std::domain_error("zeroth root is undefined");
  if (x.sign() < 0) throw std::domain_error("root of negative integer " + x.to_string());
  if (x.is_zero() || n == 1) return x;
  if (x.bit_length() <= n) return BigInt(1);  // 1 <= x < 2^n

  const BigInt degree(n);
  const BigInt degree_less_one(n - 1);
  auto step = [&](const BigInt& r) {
    return floor_div(degree_less_one * r + floor_div(x, pow(r, n - 1)), degree);
  };

  // One step from any positive seed lands at or above floor(x^(1/n));
  // from there the integer iteration decreases strictly until it stops.
  BigInt r = step(newton_seed(x, n));
  for (BigInt next = step(r); next < r; next = step(r)) r = std::move(next);

  if (pow(r, n) > x || pow(r + BigInt(1), n) <= x) {
    throw std::logic_error("integer root certificate failed for n=" + std::to_string(n));
  }
  return r;
}

BigInt floor_root_scaled(const BigRational& x, std::uint64_t n, std::uint64_t scale) {
  if (x.sign() < 0) throw std::domain_error("root of negative rational " + x.to_string());
  BigInt radicand = floor_div(x.num() * pow10(scale * n), x.den());
  return int_nth_root(radicand, n);
}

std::string nth_root_decimal(const BigInt& x, std::uint64_t n, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  BigInt floored = floor_root_scaled(BigRational(x), n,
                                     static_cast<std::uint64_t>(digits + kRootGuardDigits));
  return format_scaled(round_from_floor(floored, kRootGuardDigits), digits);
}

std::strong_ordering pow_cmp(const BigInt& a, std::uint64_t p, const BigInt& b, std::uint64_t q) {
  if (a < BigInt(1) || b < BigInt(1)) throw std::domain_error("pow_cmp needs bases >= 1");
  // 2^((bits-1)*e) <= base^e < 2^(bits*e)
  const std::uint64_t la = a.bit_length();
  const std::uint64_t lb = b.bit_length();
  if (p == 0 || a == BigInt(1)) {
    return (q == 0 || b == BigInt(1)) ? std::strong_ordering::equal : std::strong_ordering::less;
  }
  if (q == 0 || b == BigInt(1)) return std::strong_ordering::greater;
  if (la * p <= (lb - 1) * q) return std::strong_ordering::less;
  if (lb * q <= (la - 1) * p) return std::strong_ordering::greater;
  return pow(a, p) <=> pow(b, q);
}

}  // namespace logcert
