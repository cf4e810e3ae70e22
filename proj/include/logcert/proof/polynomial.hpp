#pragma once

// Univariate polynomials with coefficients in Q(sqrt 2), kept in canonical
// form (no trailing zero coefficients; the zero polynomial has none).

#include "logcert/exact/quad.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace logcert {

class QuadPolynomial {
 public:
  QuadPolynomial() = default;
  explicit QuadPolynomial(std::vector<QuadNumber> ascending);
  QuadPolynomial(std::initializer_list<QuadNumber> ascending);

  static QuadPolynomial constant(QuadNumber c);
  static QuadPolynomial x();
  /// x - root
  static QuadPolynomial linear_root(const QuadNumber& root);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<QuadNumber>& coeffs() const { return c_; }
  /// Zero beyond the degree.
  [[nodiscard]] QuadNumber coeff(std::size_t i) const;
  [[nodiscard]] QuadNumber leading() const;

  [[nodiscard]] QuadNumber eval(const QuadNumber& at) const;
  /// p(x + shift), by repeated synthetic division.
  [[nodiscard]] QuadPolynomial taylor_shift(const QuadNumber& shift) const;
  [[nodiscard]] QuadPolynomial derivative() const;
  /// Divides every coefficient by the leading one.
  [[nodiscard]] QuadPolynomial monic() const;

  QuadPolynomial operator-() const;
  QuadPolynomial& operator+=(const QuadPolynomial& o);
  QuadPolynomial& operator-=(const QuadPolynomial& o);
  QuadPolynomial& operator*=(const QuadPolynomial& o);
  friend QuadPolynomial operator+(QuadPolynomial a, const QuadPolynomial& b) { return a += b; }
  friend QuadPolynomial operator-(QuadPolynomial a, const QuadPolynomial& b) { return a -= b; }
  friend QuadPolynomial operator*(QuadPolynomial a, const QuadPolynomial& b) { return a *= b; }

  friend bool operator==(const QuadPolynomial&, const QuadPolynomial&) = default;

 private:
  void trim();
  std::vector<QuadNumber> c_;
};

struct PolyDivision {
  QuadPolynomial quotient;
  QuadPolynomial remainder;
};

/// Euclidean division over the field. Throws std::domain_error for a zero divisor.
PolyDivision divmod(const QuadPolynomial& a, const QuadPolynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
QuadPolynomial gcd(QuadPolynomial a, QuadPolynomial b);

/// e.g. "-24(179+127√2)k^2 + 3(3146+2220√2)k - 3(1197+844√2)".
std::string to_string(const QuadPolynomial& p, std::string_view var = "n");

}  // namespace logcert
