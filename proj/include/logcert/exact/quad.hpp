#pragma once

// Elements a + b*sqrt(2) of the field Q(sqrt 2), with rational a and b.
// The representation is unique, so equality is structural; ordering is
// decided exactly by quad_sign.

#include "logcert/exact/rational.hpp"

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace logcert {

class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}
  QuadNumber(BigRational a) : a_(std::move(a)) {}  // NOLINT
  QuadNumber(const BigInt& a) : a_(a) {}           // NOLINT

  template <std::integral T>
  QuadNumber(T a) : a_(a) {}  // NOLINT

  static QuadNumber sqrt2() { return QuadNumber(BigRational(0), BigRational(1)); }

  [[nodiscard]] const BigRational& rational_part() const { return a_; }
  [[nodiscard]] const BigRational& surd_part() const { return b_; }

  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

  [[nodiscard]] QuadNumber conjugate() const { return QuadNumber(a_, -b_); }
  /// Field norm a^2 - 2b^2, i.e. x * conjugate(x).
  [[nodiscard]] BigRational norm() const { return a_ * a_ - BigRational(2) * b_ * b_; }

  /// Throws std::domain_error for zero.
  [[nodiscard]] QuadNumber inverse() const;

  QuadNumber operator-() const { return QuadNumber(-a_, -b_); }

  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);
  QuadNumber& operator/=(const QuadNumber& o);

  friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
  friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
  friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
  friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }

  friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y);

  friend std::ostream& operator<<(std::ostream& os, const QuadNumber& x);

 private:
  BigRational a_;
  BigRational b_;
};

/// Exact sign of a + b*sqrt(2): immediate when a and b agree in sign,
/// otherwise decided by comparing a^2 against 2b^2.
int quad_sign(const QuadNumber& x);

QuadNumber pow(const QuadNumber& base, std::uint64_t exponent);

/// Surd rendering such as "3/2+√2", "-3(4647+3328√2)" or "3-2√2".
std::string to_string(const QuadNumber& x);

}  // namespace logcert
