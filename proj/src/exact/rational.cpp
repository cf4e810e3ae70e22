#include "logcert/exact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace logcert {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

BigRational BigRational::from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(BigInt::from_string(text));
  return BigRational(BigInt::from_string(text.substr(0, slash)),
                     BigInt::from_string(text.substr(slash + 1)));
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(v_))); }

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return BigRational(den(), num());
}

BigInt BigRational::floor() const { return floor_div(num(), den()); }

std::string BigRational::to_string() const { return v_.get_str(10); }

BigRational BigRational::operator-() const { return BigRational(mpq_class(-v_)); }

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

BigRational pow(const BigRational& base, std::int64_t exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  auto e = static_cast<std::uint64_t>(exponent);
  return BigRational(pow(base.num(), e), pow(base.den(), e));
}

}  // namespace logcert
