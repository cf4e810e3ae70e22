#include "logcert/exact/quad.hpp"

#include <ostream>
#include <stdexcept>

namespace logcert {

QuadNumber QuadNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt 2)");
  // The norm is nonzero for every nonzero element since sqrt(2) is irrational.
  BigRational n = norm();
  return QuadNumber(a_ / n, -b_ / n);
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
  BigRational a = a_ * o.a_ + BigRational(2) * b_ * o.b_;
  BigRational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y) {
  return quad_sign(x - y) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const QuadNumber& x) { return os << to_string(x); }

int quad_sign(const QuadNumber& x) {
  int sa = x.rational_part().sign();
  int sb = x.surd_part().sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the part with the larger square dominates.
  const BigRational& a = x.rational_part();
  const BigRational& b = x.surd_part();
  auto c = (a * a) <=> (BigRational(2) * b * b);
  if (c == 0) return 0;  // unreachable for rational a, b; kept for totality
  return c > 0 ? sa : sb;
}

QuadNumber pow(const QuadNumber& base, std::uint64_t exponent) {
  QuadNumber result(1);
  QuadNumber sq = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= sq;
    exponent >>= 1U;
    if (exponent != 0) sq *= sq;
  }
  return result;
}

namespace {

// Rational content: gcd of numerators over lcm of denominators.
BigRational content(const BigRational& a, const BigRational& b) {
  BigInt g = gcd(a.num(), b.num());
  BigInt d = a.den() * exact_div(b.den(), gcd(a.den(), b.den()));
  return BigRational(g, d);
}

std::string surd_term(const BigRational& b, bool leading) {
  std::string out;
  if (b.sign() < 0) {
    out += "-";
  } else if (!leading) {
    out += "+";
  }
  BigRational m = b.abs();
  if (m != BigRational(1)) out += m.to_string();
  out += "√2";
  return out;
}

std::string plain(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) return a.to_string();
  if (a.is_zero()) return surd_term(b, true);
  return a.to_string() + surd_term(b, false);
}

}  // namespace

std::string to_string(const QuadNumber& x) {
  const BigRational& a = x.rational_part();
  const BigRational& b = x.surd_part();
  if (a.is_zero() || b.is_zero()) return plain(a, b);

  BigRational g = content(a, b);
  if (a.sign() < 0) g = -g;
  BigRational ia = a / g;
  BigRational ib = b / g;
  if (g.is_integer() && g.abs() != BigRational(1)) {
    return g.to_string() + "(" + plain(ia, ib) + ")";
  }
  if (g == BigRational(-1) && b.sign() < 0) return "-(" + plain(ia, ib) + ")";
  return plain(a, b);
}

}  // namespace logcert
