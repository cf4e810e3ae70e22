#pragma once

#include "logcert/proof/polynomial.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace logcert {

/// numer / denom over Q(sqrt 2)[n]. Normalized on construction: the gcd is
/// cancelled and the denominator made monic.
class QuadRationalFunction {
 public:
  QuadRationalFunction() : den_(QuadPolynomial::constant(QuadNumber(1))) {}
  /// Throws std::domain_error when denom is the zero polynomial.
  QuadRationalFunction(QuadPolynomial numer, QuadPolynomial denom);
  QuadRationalFunction(QuadPolynomial p);  // NOLINT: polynomials embed
  QuadRationalFunction(QuadNumber c);      // NOLINT

  [[nodiscard]] const QuadPolynomial& numer() const { return num_; }
  [[nodiscard]] const QuadPolynomial& denom() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  /// Throws std::domain_error where the denominator vanishes.
  [[nodiscard]] QuadNumber eval(const QuadNumber& at) const;

  QuadRationalFunction operator-() const { return {-num_, den_}; }
  friend QuadRationalFunction operator+(const QuadRationalFunction& x, const QuadRationalFunction& y);
  friend QuadRationalFunction operator-(const QuadRationalFunction& x, const QuadRationalFunction& y);
  friend QuadRationalFunction operator*(const QuadRationalFunction& x, const QuadRationalFunction& y);
  /// Throws std::domain_error for the zero function as divisor.
  friend QuadRationalFunction operator/(const QuadRationalFunction& x, const QuadRationalFunction& y);

  /// Decided by the cross-multiplied polynomial identity, independent of normalization.
  friend bool operator==(const QuadRationalFunction& x, const QuadRationalFunction& y);

 private:
  QuadPolynomial num_;
  QuadPolynomial den_;
};

enum class RfOp { add, sub, mul, div, equal };

std::variant<QuadRationalFunction, bool> rf_arith(const QuadRationalFunction& x, const QuadRationalFunction& y,
                                                  RfOp op);

std::string to_string(const QuadRationalFunction& f, std::string_view var = "n");

}  // namespace logcert
