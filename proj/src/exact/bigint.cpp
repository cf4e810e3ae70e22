#include "logcert/exact/bigint.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace logcert {

BigInt BigInt::from_string(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return BigInt(mpz_class(s, 10));
}

std::string BigInt::to_string() const { return v_.get_str(10); }

std::uint64_t BigInt::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

double BigInt::log2_approx() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v_.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

bool BigInt::fits_int64() const { return v_.fits_slong_p(); }

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return v_.get_si();
}

std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.to_string(); }

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

BigInt pow10(std::uint64_t exponent) { return pow(BigInt(10), exponent); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

bool divides(const BigInt& divisor, const BigInt& x) {
  if (divisor.is_zero()) return x.is_zero();
  return mpz_divisible_p(x.mpz().get_mpz_t(), divisor.mpz().get_mpz_t()) != 0;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!divides(b, a)) {
    throw std::domain_error("inexact division: " + a.to_string() + " / " + b.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(q));
}

}  // namespace logcert
