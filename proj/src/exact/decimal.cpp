#include "logcert/exact/decimal.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "logcert/exact/roots.hpp"

namespace logcert {

namespace {

BigRational scale_by_pow10(const BigRational& x, std::int64_t k) {
  if (k >= 0) return x * BigRational(pow10(static_cast<std::uint64_t>(k)));
  return x / BigRational(pow10(static_cast<std::uint64_t>(-k)));
}

double log2_abs(const BigRational& x) { return x.num().log2_approx() - x.den().log2_approx(); }

// log2 of |a| + |b|*sqrt(2) without leaving double range.
double log2_sum(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) return log2_abs(a);
  double lb = log2_abs(b) + 0.5;
  if (a.is_zero()) return lb;
  double la = log2_abs(a);
  double hi = std::max(la, lb);
  double lo = std::min(la, lb);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

double log2_magnitude(const QuadNumber& x) {
  const BigRational& a = x.rational_part();
  const BigRational& b = x.surd_part();
  if (a.sign() * b.sign() >= 0) return log2_sum(a, b);
  // Opposite signs cancel; |x| = |norm| / |conjugate| and the conjugate does not.
  return log2_abs(x.norm()) - log2_sum(a, b);
}

QuadNumber magnitude(const QuadNumber& x) { return quad_sign(x) < 0 ? -x : x; }

QuadNumber power_of_ten(std::int64_t e) {
  return QuadNumber(scale_by_pow10(BigRational(1), e));
}

}  // namespace

BigInt floor_scaled(const BigRational& x, std::int64_t k) {
  return scale_by_pow10(x, k).floor();
}

BigInt floor_scaled(const QuadNumber& x, std::int64_t k) {
  QuadNumber y(scale_by_pow10(x.rational_part(), k), scale_by_pow10(x.surd_part(), k));
  if (y.is_rational()) return y.rational_part().floor();

  // Approximate with sqrt(2) truncated well below the surd coefficient's scale,
  // then settle the floor by exact sign tests.
  const BigRational& b = y.surd_part();
  double digits_b = std::max(0.0, std::ceil(log2_abs(b) * 0.30103));
  auto precision = static_cast<std::uint64_t>(digits_b) + kSqrt2GuardDigits;
  BigInt root2 = isqrt(BigInt(2) * pow10(2 * precision));
  BigRational approx = y.rational_part() + b * BigRational(root2, pow10(precision));
  BigInt m = approx.floor();
  while (quad_sign(y - QuadNumber(m)) < 0) m -= BigInt(1);
  while (quad_sign(y - QuadNumber(m + BigInt(1))) >= 0) m += BigInt(1);
  return m;
}

BigInt round_from_floor(const BigInt& floored, int guard) {
  if (guard <= 0) return floored;
  BigInt unit = pow10(static_cast<std::uint64_t>(guard));
  BigInt q = floor_div(floored, unit);
  BigInt r = floored - q * unit;
  if (r >= BigInt(5) * pow10(static_cast<std::uint64_t>(guard - 1))) q += BigInt(1);
  return q;
}

std::string format_scaled(const BigInt& magnitude_scaled, int digits, bool negative) {
  std::string s = magnitude_scaled.abs().to_string();
  auto width = static_cast<std::size_t>(digits) + 1;
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (negative && !magnitude_scaled.is_zero()) s.insert(0, "-");
  return s;
}

std::string to_fixed(const BigRational& x, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be non-negative");
  BigInt f = floor_scaled(x.abs(), digits + 1);
  return format_scaled(round_from_floor(f, 1), digits, x.sign() < 0);
}

std::string to_fixed(const QuadNumber& x, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be non-negative");
  BigInt f = floor_scaled(magnitude(x), digits + 1);
  return format_scaled(round_from_floor(f, 1), digits, quad_sign(x) < 0);
}

std::string to_general(const QuadNumber& x, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be positive");
  if (x.is_zero()) return "0";
  const QuadNumber m = magnitude(x);

  // Decimal exponent e with 10^e <= |x| < 10^(e+1), estimated then made exact.
  auto e = static_cast<std::int64_t>(std::floor(log2_magnitude(m) * 0.30102999566398120));
  while (m < power_of_ten(e)) --e;
  while (m >= power_of_ten(e + 1)) ++e;

  BigInt mant = round_from_floor(floor_scaled(m, significant - e), 1);
  if (mant == pow10(static_cast<std::uint64_t>(significant))) {
    mant = pow10(static_cast<std::uint64_t>(significant - 1));
    ++e;
  }
  std::string d = mant.to_string();
  while (d.size() > 1 && d.back() == '0') d.pop_back();

  std::string out = quad_sign(x) < 0 ? "-" : "";
  if (e >= -4 && e < significant) {
    if (e >= 0) {
      auto int_len = static_cast<std::size_t>(e) + 1;
      if (d.size() <= int_len) {
        out += d + std::string(int_len - d.size(), '0');
      } else {
        out += d.substr(0, int_len) + "." + d.substr(int_len);
      }
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    }
  } else {
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(e);
  }
  return out;
}

BigRational parse_decimal(std::string_view text) {
  auto fail = [&]() -> BigRational {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string digits;
  std::int64_t exponent = 0;
  bool seen_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) return fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::string exp_text(text.substr(i));
    try {
      std::size_t used = 0;
      exponent += std::stoll(exp_text, &used);
      if (used != exp_text.size()) return fail();
    } catch (const std::logic_error&) {
      return fail();
    }
    i = text.size();
  }
  if (i != text.size()) return fail();
  BigRational value = scale_by_pow10(BigRational(BigInt::from_string(digits)), exponent);
  return negative ? -value : value;
}

}  // namespace logcert
