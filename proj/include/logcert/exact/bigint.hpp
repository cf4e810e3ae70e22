#pragma once

// Arbitrary-precision signed integer. Thin value wrapper over GMP's mpz_class
// so the rest of the library never touches GMP types directly.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace logcert {

class BigInt {
 public:
  BigInt() = default;

  template <std::signed_integral T>
  BigInt(T v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of numeric types

  template <std::unsigned_integral T>
  BigInt(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT

  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed run of decimal digits. Throws std::invalid_argument.
  static BigInt from_string(std::string_view text);

  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }

  /// Number of bits in |x|; 0 for zero.
  [[nodiscard]] std::uint64_t bit_length() const;

  /// log2(|x|) as a double, valid far beyond the double exponent range.
  [[nodiscard]] double log2_approx() const;

  [[nodiscard]] bool fits_int64() const;
  [[nodiscard]] std::int64_t to_int64() const;

  [[nodiscard]] const mpz_class& mpz() const { return v_; }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& x);

 private:
  mpz_class v_;
};

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigInt pow10(std::uint64_t exponent);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Floor division and the matching non-negative-divisor remainder. Throw std::domain_error on b == 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

bool divides(const BigInt& divisor, const BigInt& x);

/// a / b, throwing std::domain_error unless b divides a exactly.
BigInt exact_div(const BigInt& a, const BigInt& b);

}  // namespace logcert
