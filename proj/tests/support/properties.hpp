#pragma once

// Randomized property suites over the exact layer. Shared by the unit tests
// and the acceptance runner; each returns the number of failing cases.
// Oracles here deliberately avoid the code paths under test: quad_sign is
// checked against 50-digit decimal floats, int_nth_root against GMP's mpz_root.

#include "logcert/exact/bigint.hpp"
#include "logcert/exact/decimal.hpp"
#include "logcert/exact/quad.hpp"
#include "logcert/exact/rational.hpp"
#include "logcert/exact/roots.hpp"
#include "logcert/sequence/bfile.hpp"
#include "logcert/sequence/term_store.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace logcert::testing {

using Dec50 = boost::multiprecision::cpp_dec_float_50;

inline BigInt random_bigint(std::mt19937_64& rng, int max_digits, bool allow_negative = true) {
  std::uniform_int_distribution<int> len(1, max_digits);
  std::uniform_int_distribution<int> digit(0, 9);
  std::string s;
  int n = len(rng);
  for (int i = 0; i < n; ++i) s += static_cast<char>('0' + digit(rng));
  BigInt v = BigInt::from_string(s);
  if (allow_negative && (rng() & 1U)) v = -v;
  return v;
}

inline BigRational random_rational(std::mt19937_64& rng, int max_digits) {
  BigInt den = random_bigint(rng, max_digits, false) + BigInt(1);
  return BigRational(random_bigint(rng, max_digits), den);
}

inline QuadNumber random_quad(std::mt19937_64& rng, int max_digits) {
  return QuadNumber(random_rational(rng, max_digits), random_rational(rng, max_digits));
}

inline int field_axiom_failures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    QuadNumber x = random_quad(rng, 12);
    QuadNumber y = random_quad(rng, 12);
    QuadNumber z = random_quad(rng, 12);
    bool ok = (x * y) * z == x * (y * z) && (x + y) + z == x + (y + z) &&
              x * (y + z) == x * y + x * z && x * y == y * x && x + (-x) == QuadNumber(0);
    if (!x.is_zero()) ok = ok && x * x.inverse() == QuadNumber(1);
    if (!ok) ++failures;
  }
  return failures;
}

inline Dec50 to_dec50(const BigRational& r) {
  return Dec50(r.num().to_string()) / Dec50(r.den().to_string());
}

/// Sign of a + b*sqrt(2) from a 50-digit decimal evaluation; 2 when the
/// evaluation is too close to zero to be trusted.
inline int decimal_oracle_sign(const QuadNumber& x) {
  Dec50 a = to_dec50(x.rational_part());
  Dec50 b = to_dec50(x.surd_part());
  Dec50 v = a + b * boost::multiprecision::sqrt(Dec50(2));
  Dec50 scale = boost::multiprecision::abs(a) + boost::multiprecision::abs(b) * 2;
  if (boost::multiprecision::abs(v) <= scale * Dec50("1e-45")) return v == 0 && scale == 0 ? 0 : 2;
  return v > 0 ? 1 : -1;
}

inline int quad_sign_failures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    QuadNumber x = random_quad(rng, 10);
    // Half the cases are near-cancelling pairs: a close to -b*sqrt(2).
    if (i % 2 == 1) {
      BigInt b = random_bigint(rng, 15);
      BigInt a = -isqrt(BigInt(2) * b * b);
      if (b.sign() < 0) a = -a;
      if (rng() & 1U) a += BigInt(1);
      x = QuadNumber(BigRational(a), BigRational(b));
    }
    int oracle = decimal_oracle_sign(x);
    if (oracle == 2) continue;
    if (quad_sign(x) != oracle) ++failures;
  }
  return failures;
}

inline int nth_root_failures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> degree(1, 40);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    BigInt x = random_bigint(rng, 120, false);
    std::uint64_t n = degree(rng);
    BigInt r = int_nth_root(x, n);
    mpz_class oracle;
    mpz_root(oracle.get_mpz_t(), x.mpz().get_mpz_t(), n);
    bool certificate = pow(r, n) <= x && pow(r + BigInt(1), n) > x;
    if (!certificate || r.mpz() != oracle) ++failures;
  }
  return failures;
}

/// Rendering at d digits versus the same value rendered at 2d digits and
/// rounded back: the two may differ by at most one unit in the last place.
inline int decimal_consistency_failures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digits(1, 12);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    int d = digits(rng);
    QuadNumber x = random_quad(rng, 8);
    BigRational shown = parse_decimal(to_fixed(x, d));
    BigRational fine = parse_decimal(to_fixed(x, 2 * d));
    BigRational ulp(BigInt(1), pow10(static_cast<std::uint64_t>(d)));
    if ((shown - fine).abs() > ulp) ++failures;

    BigInt radicand = random_bigint(rng, 30, false) + BigInt(1);
    std::uint64_t n = 1 + static_cast<std::uint64_t>(rng() % 9);
    BigRational r1 = parse_decimal(nth_root_decimal(radicand, n, d));
    BigRational r2 = parse_decimal(nth_root_decimal(radicand, n, 2 * d));
    if ((r1 - r2).abs() > ulp) ++failures;
  }
  return failures;
}

inline int pow_cmp_failures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    BigInt a = random_bigint(rng, 6, false) + BigInt(1);
    BigInt b = random_bigint(rng, 6, false) + BigInt(1);
    std::uint64_t p = rng() % 60;
    std::uint64_t q = rng() % 60;
    if (i % 3 == 0) b = a;  // force the exact path now and then
    if (pow_cmp(a, p, b, q) != (pow(a, p) <=> pow(b, q))) ++failures;
  }
  return failures;
}

inline int bfile_roundtrip_failures(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    std::vector<BigInt> terms;
    std::size_t len = 1 + rng() % 40;
    for (std::size_t j = 0; j < len; ++j) terms.push_back(random_bigint(rng, 80));
    auto first = static_cast<std::int64_t>(rng() % 100) - 20;
    TermStore store("random", first, terms);
    std::stringstream buffer;
    write_bfile(store, buffer);
    std::string text = buffer.str();
    TermStore back = read_bfile(buffer, "random");
    std::stringstream again;
    write_bfile(back, again);
    if (!(back == store) || again.str() != text) ++failures;
  }
  return failures;
}

}  // namespace logcert::testing
