#pragma once

// Exact rational number, always in lowest terms with a positive denominator.

#include "logcert/exact/bigint.hpp"

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace logcert {

class BigRational {
 public:
  BigRational() = default;

  template <std::integral T>
  BigRational(T v) : v_(mpz_class(BigInt(v).mpz())) {}  // NOLINT

  BigRational(const BigInt& v) : v_(v.mpz()) {}  // NOLINT

  /// Throws std::domain_error when den is zero.
  BigRational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q".
  static BigRational from_string(std::string_view text);

  [[nodiscard]] BigInt num() const { return BigInt(v_.get_num()); }
  [[nodiscard]] BigInt den() const { return BigInt(v_.get_den()); }

  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] BigRational abs() const;
  [[nodiscard]] BigRational reciprocal() const;
  [[nodiscard]] BigInt floor() const;

  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] const mpq_class& mpq() const { return v_; }

  BigRational operator-() const;

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x);

 private:
  explicit BigRational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Integer power; negative exponents invert (std::domain_error for 0^-k).
BigRational pow(const BigRational& base, std::int64_t exponent);

}  // namespace logcert
