#include "logcert/proof/rational_function.hpp"

#include <stdexcept>

namespace logcert {

QuadRationalFunction::QuadRationalFunction(QuadPolynomial numer, QuadPolynomial denom)
    : num_(std::move(numer)), den_(std::move(denom)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QuadPolynomial::constant(QuadNumber(1));
    return;
  }
  QuadPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).quotient;
    den_ = divmod(den_, g).quotient;
  }
  const QuadNumber lead = den_.leading();
  num_ = num_ * QuadPolynomial::constant(QuadNumber(1) / lead);
  den_ = den_.monic();
}

QuadRationalFunction::QuadRationalFunction(QuadPolynomial p)
    : num_(std::move(p)), den_(QuadPolynomial::constant(QuadNumber(1))) {}

QuadRationalFunction::QuadRationalFunction(QuadNumber c)
    : num_(QuadPolynomial::constant(std::move(c))), den_(QuadPolynomial::constant(QuadNumber(1))) {}

QuadNumber QuadRationalFunction::eval(const QuadNumber& at) const {
  QuadNumber d = den_.eval(at);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole (" + to_string(at) + ")");
  return num_.eval(at) / d;
}

QuadRationalFunction operator+(const QuadRationalFunction& x, const QuadRationalFunction& y) {
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

QuadRationalFunction operator-(const QuadRationalFunction& x, const QuadRationalFunction& y) {
  return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}

QuadRationalFunction operator*(const QuadRationalFunction& x, const QuadRationalFunction& y) {
  return {x.num_ * y.num_, x.den_ * y.den_};
}

QuadRationalFunction operator/(const QuadRationalFunction& x, const QuadRationalFunction& y) {
  if (y.is_zero()) throw std::domain_error("division by the zero rational function");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

bool operator==(const QuadRationalFunction& x, const QuadRationalFunction& y) {
  return x.num_ * y.den_ == y.num_ * x.den_;
}

std::variant<QuadRationalFunction, bool> rf_arith(const QuadRationalFunction& x, const QuadRationalFunction& y,
                                                  RfOp op) {
  switch (op) {
    case RfOp::add: return x + y;
    case RfOp::sub: return x - y;
    case RfOp::mul: return x * y;
    case RfOp::div: return x / y;
    case RfOp::equal: return x == y;
  }
  throw std::invalid_argument("unknown rational-function operation");
}

std::string to_string(const QuadRationalFunction& f, std::string_view var) {
  std::string num = to_string(f.numer(), var);
  if (f.denom().degree() == 0) return num;
  return "(" + num + ") / (" + to_string(f.denom(), var) + ")";
}

}  // namespace logcert
