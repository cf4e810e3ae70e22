#include "doctest.h"

#include "logcert/exact/bigint.hpp"
#include "logcert/exact/certificate.hpp"
#include "logcert/exact/decimal.hpp"
#include "logcert/exact/quad.hpp"
#include "logcert/exact/rational.hpp"
#include "logcert/exact/roots.hpp"

#include <stdexcept>

using namespace logcert;

namespace {
QuadNumber q(const char* a, const char* b) {
  return QuadNumber(BigRational::from_string(a), BigRational::from_string(b));
}
}  // namespace

TEST_CASE("BigInt parses, prints and rejects garbage") {
  CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
        "-123456789012345678901234567890");
  CHECK(BigInt::from_string("+42") == BigInt(42));
  CHECK_THROWS_AS(BigInt::from_string("12a"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_string("-"), std::invalid_argument);
  CHECK_THROWS_AS(exact_div(BigInt(7), BigInt(2)), std::domain_error);
  CHECK(floor_div(BigInt(-7), BigInt(2)) == BigInt(-4));
  CHECK(floor_mod(BigInt(-7), BigInt(2)) == BigInt(1));
}

TEST_CASE("rational arithmetic stays canonical") {
  CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
  BigRational half(BigInt(2), BigInt(4));
  CHECK(half.num() == BigInt(1));
  CHECK(half.den() == BigInt(2));
  BigRational neg(BigInt(3), BigInt(-6));
  CHECK(neg.num() == BigInt(-1));
  CHECK(neg.den() == BigInt(2));
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
  // 87*87 = 7569 < 25*329 = 8225, so r_3 < r_4.
  CHECK((BigRational(87, 25) <=> BigRational(329, 87)) == std::strong_ordering::less);
}

TEST_CASE("Q(sqrt 2) field operations") {
  QuadNumber l(3, 2);
  CHECK(l * l.conjugate() == QuadNumber(1));
  CHECK(l.inverse() == QuadNumber(3, -2));
  QuadNumber one_plus(1, 1);
  CHECK(one_plus * one_plus == l);
  CHECK(pow(one_plus, 0) == QuadNumber(1));
  CHECK(pow(one_plus, 2) == l);
  // Oracle: repeated multiplication.
  CHECK(pow(l, 3) == l * l * l);
  CHECK(pow(l, 3) == QuadNumber(99, 70));
  CHECK_THROWS_AS((void)QuadNumber(0).inverse(), std::domain_error);
}

TEST_CASE("quad_sign decides exactly") {
  CHECK(quad_sign(QuadNumber(3, -2)) == 1);
  CHECK(quad_sign(QuadNumber(1, -1)) == -1);
  CHECK(quad_sign(QuadNumber(0)) == 0);
  QuadNumber b3 = q("3/2", "1");
  CHECK(quad_sign(b3 - QuadNumber(BigRational(87, 25))) == -1);
  CHECK(QuadNumber(3, -2) < QuadNumber(1));
}

TEST_CASE("quad_to_decimal rounds correctly") {
  CHECK(to_fixed(QuadNumber(3, 2), 5) == "5.82843");
  CHECK(to_fixed(q("3/2", "1"), 5) == "2.91421");
  CHECK(to_fixed(q("15/8", "5/4"), 5) == "3.64277");  // b_4
  CHECK(to_fixed(QuadNumber(1, -1), 6) == "-0.414214");
  CHECK(to_fixed(QuadNumber(BigRational(1, 2)), 0) == "1");
  CHECK(to_fixed(QuadNumber(BigRational(-1, 2)), 0) == "-1");
  CHECK(to_fixed(BigRational(87, 25), 5) == "3.48000");
}

TEST_CASE("general rendering matches printed witness style") {
  CHECK(to_general(QuadNumber(BigRational::from_string("-15798037435/100"))) == "-1.5798e8");
  CHECK(to_general(QuadNumber(BigInt(6419052564))) == "6.41905e9");
  CHECK(to_general(QuadNumber(BigRational(293164377, 100000000000LL))) == "0.00293164");
  CHECK(to_general(QuadNumber(BigInt(-6))) == "-6");
  CHECK(to_general(QuadNumber(BigRational(999999999, 1000000000))) == "1");
  CHECK(to_general(QuadNumber(3, -2)) == "0.171573");
  CHECK(to_general(QuadNumber(0)) == "0");
}

TEST_CASE("parse_decimal") {
  CHECK(parse_decimal("4.0799") == BigRational(40799, 10000));
  CHECK(parse_decimal("-1.5798e8") == BigRational(-157980000));
  CHECK(parse_decimal("12") == BigRational(12));
  CHECK_THROWS_AS(parse_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("e5"), std::invalid_argument);
}

TEST_CASE("int_nth_root boundaries") {
  CHECK(int_nth_root(BigInt(87), 1) == BigInt(87));
  CHECK(int_nth_root(BigInt(624), 2) == BigInt(24));
  CHECK(int_nth_root(BigInt(625), 2) == BigInt(25));
  CHECK(int_nth_root(pow10(18), 3) == pow10(6));
  CHECK(int_nth_root(BigInt(0), 5) == BigInt(0));
  CHECK(int_nth_root(BigInt(1), 5) == BigInt(1));
  CHECK(int_nth_root(pow10(20) + BigInt(7), 7) == BigInt(719));
  CHECK_THROWS_AS(int_nth_root(BigInt(-8), 3), std::domain_error);
  CHECK_THROWS_AS(int_nth_root(BigInt(8), 0), std::domain_error);
  // Large index with a small root: must not crawl down from a bad seed.
  BigInt big = pow(BigInt(123456789), 5000) + BigInt(1);
  CHECK(int_nth_root(big, 5000) == BigInt(123456789));
}

TEST_CASE("nth_root_decimal") {
  CHECK(nth_root_decimal(BigInt(4), 2, 5) == "2.00000");
  CHECK(nth_root_decimal(BigInt(2), 2, 5) == "1.41421");
  // 1359^(1/6) = 3.3281526901... (60-digit mpmath oracle)
  CHECK(nth_root_decimal(BigInt(1359), 6, 6) == "3.328153");
}

TEST_CASE("pow_cmp against the printed root comparisons") {
  CHECK(pow_cmp(BigInt(1), 2, BigInt(7), 1) == std::strong_ordering::less);
  CHECK(pow_cmp(BigInt(25), 4, BigInt(87), 3) == std::strong_ordering::less);
  CHECK(pow(BigInt(25), 4) - pow(BigInt(87), 3) == BigInt(-267878));
  CHECK(pow_cmp(BigInt(87), 5, BigInt(329), 4) == std::strong_ordering::less);
  CHECK(pow(BigInt(87), 5) - pow(BigInt(329), 4) == BigInt(-6731904874LL));
  CHECK(pow_cmp(BigInt(4), 3, BigInt(8), 2) == std::strong_ordering::equal);
  CHECK(pow_cmp(BigInt(1), 0, BigInt(5), 0) == std::strong_ordering::equal);
  CHECK(pow_cmp(BigInt(2), 100, BigInt(3), 10) == std::strong_ordering::greater);
  CHECK_THROWS_AS(pow_cmp(BigInt(0), 1, BigInt(1), 1), std::domain_error);
}

TEST_CASE("surd rendering") {
  CHECK(to_string(QuadNumber(-13941, -9984)) == "-3(4647+3328√2)");
  CHECK(to_string(QuadNumber(1881, 1242)) == "9(209+138√2)");
  CHECK(to_string(q("3/2", "1")) == "3/2+√2");
  CHECK(to_string(QuadNumber(3, -2)) == "3-2√2");
  CHECK(to_string(QuadNumber(0, -1)) == "-√2");
  CHECK(to_string(QuadNumber(-1, -1)) == "-(1+√2)");
  CHECK(to_string(QuadNumber(7)) == "7");
}

TEST_CASE("certificate report folds step statuses") {
  CertificateReport r{"demo"};
  CHECK(r.certified());
  r.add({.id = "a", .description = "fine"});
  r.add({.id = "b", .description = "evidence", .status = CertificateStatus::evidence_only});
  CHECK(r.certified());
  r.add({.id = "c", .description = "broken", .status = CertificateStatus::refuted, .witness = BigInt(-6)});
  CHECK(r.status == CertificateStatus::refuted);
  REQUIRE(r.first_refuted() != nullptr);
  CHECK(r.first_refuted()->id == "c");
  CHECK(r.find("b") != nullptr);
  CHECK(exact_string(*r.find("c")->witness) == "-6");
}
