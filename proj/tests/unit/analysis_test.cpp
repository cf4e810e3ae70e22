#include "doctest.h"

#include "logcert/analysis/bound.hpp"
#include "logcert/analysis/explorer.hpp"
#include "logcert/analysis/log_shape.hpp"
#include "logcert/analysis/root_checks.hpp"
#include "logcert/exact/decimal.hpp"
#include "logcert/exact/roots.hpp"
#include "logcert/sequence/generate.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>

using namespace logcert;

namespace {

const TermStore& R() {
  static const TermStore store = build_terms(builtin_R(), 1100, Method::recurrence);
  return store;
}

const TermStore& S() {
  static const TermStore store = build_terms(builtin_S(), 205, Method::recurrence);
  return store;
}

TermStore from(std::initializer_list<long> values, std::int64_t first = 0) {
  std::vector<BigInt> v;
  for (long x : values) v.emplace_back(x);
  return TermStore("t", first, std::move(v));
}

BigInt diff(const CheckResult& r) { return std::get<BigInt>(r.witness->difference()); }

}  // namespace

TEST_CASE("log-shape of R") {
  CHECK(check_log_shape(R(), {4, 200}, Shape::convex).verdict == Verdict::holds_strict);
  CheckResult at3 = check_log_shape(R(), {3, 3}, Shape::convex);
  CHECK(at3.verdict == Verdict::fails);
  CHECK(*at3.first_violation == 3);
  CHECK(diff(at3) == BigInt(-16));  // 7*87 - 25^2
  CHECK(check_log_shape(from({1, 1, 1}), {1, 1}, Shape::convex, false).verdict == Verdict::holds_weak);
  CHECK(check_log_shape(from({1, 1, 1}), {1, 1}, Shape::convex, true).verdict == Verdict::fails);
  CHECK_THROWS_AS(check_log_shape(R(), {0, 5}, Shape::convex), std::out_of_range);
  CHECK_THROWS_AS(check_log_shape(R(), {5, 4}, Shape::convex), std::invalid_argument);
}

TEST_CASE("ratio monotonicity") {
  CHECK(check_ratio_monotone(R(), {3, 200}, Direction::increasing).verdict == Verdict::holds_strict);
  CHECK(check_ratio_monotone(S(), {3, 200}, Direction::increasing).verdict == Verdict::holds_strict);
  CheckResult from2 = check_ratio_monotone(R(), {2, 200}, Direction::increasing);
  CHECK(*from2.first_violation == 2);
  CHECK(std::get<BigRational>(from2.witness->lhs) == BigRational(BigInt(25), BigInt(7)));
  CHECK(std::get<BigRational>(from2.witness->rhs) == BigRational(BigInt(87), BigInt(25)));
  CHECK_THROWS_AS(check_ratio_monotone(R(), {0, 5}, Direction::increasing), std::domain_error);
}

TEST_CASE("ratio monotonicity and log-shape agree on random positive sequences") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(1, 60);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<BigInt> v;
    for (int i = 0; i < 8; ++i) v.emplace_back(d(rng));
    TermStore t("t", 0, v);
    for (bool strict : {true, false}) {
      auto a = check_ratio_monotone(t, {0, 6}, Direction::increasing, strict);
      auto b = check_log_shape(t, {1, 6}, Shape::convex, strict);
      CHECK(a.verdict == b.verdict);
      if (!a.holds()) CHECK(*a.first_violation + 1 == *b.first_violation);
    }
  }
}

TEST_CASE("root monotonicity with the small-n differences") {
  CheckResult r = check_root_monotone(R(), {1, 10}, Direction::increasing, {.record_through = 4});
  CHECK(r.verdict == Verdict::holds_strict);
  REQUIRE(r.recorded.size() == 4);
  CHECK(std::get<BigInt>(r.recorded[0].difference()) == BigInt(-6));
  CHECK(std::get<BigInt>(r.recorded[1].difference()) == BigInt(-282));
  CHECK(std::get<BigInt>(r.recorded[2].difference()) == BigInt(-267878));
  CHECK(std::get<BigInt>(r.recorded[3].difference()) == BigInt(-6731904874L));
  CHECK(check_root_monotone(R(), {11, 100}, Direction::increasing).holds());
  CHECK(check_root_monotone(S(), {1, 50}, Direction::increasing).verdict == Verdict::holds_strict);
}

TEST_CASE("root monotonicity matches 30-digit decimal roots") {
  using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>>;
  for (int n = 1; n <= 25; ++n) {
    Dec a = boost::multiprecision::pow(Dec(R()[n].to_string()), Dec(1) / n);
    Dec b = boost::multiprecision::pow(Dec(R()[n + 1].to_string()), Dec(1) / (n + 1));
    CHECK((a < b) == (pow_cmp(R()[n], n + 1, R()[n + 1], n) == std::strong_ordering::less));
  }
}

TEST_CASE("root log-concavity") {
  CHECK(check_root_log_concave(R(), {5, 60}).verdict == Verdict::holds_strict);
  CheckResult at4 = check_root_log_concave(R(), {4, 4});
  CHECK(at4.verdict == Verdict::fails);
  CHECK(check_root_log_concave(S(), {1, 40}).verdict == Verdict::holds_strict);
  CHECK_THROWS_AS(check_root_log_concave(R(), {5, 61}), std::invalid_argument);
  CHECK(check_root_log_concave(R(), {61, 62}, true).holds());
}

TEST_CASE("ratio log-concavity") {
  CHECK(check_ratio_log_concave(R(), {5, 200}).verdict == Verdict::holds_strict);
  CheckResult early = check_ratio_log_concave(R(), {2, 10});
  CHECK(early.verdict == Verdict::fails);
  CHECK(*early.first_violation == 2);
  CHECK(std::get<BigInt>(check_ratio_log_concave(R(), {4, 4}).witness->difference()) == BigInt(-4623352));
  CHECK(check_ratio_log_concave(from({1, 2, 4, 8, 16}), {1, 2}, false).verdict == Verdict::holds_weak);
}

TEST_CASE("root-ratio trend") {
  RootRatioTrend t = root_ratio_trend(R(), {5, 9}, 8);
  CHECK(t.rows[0].difference == "0.00293164");
  CHECK(t.rows[1].difference == "0.00445875");
  CHECK(t.rows[2].difference == "0.00452784");
  CHECK(t.rows[3].difference == "0.00404051");
  CHECK(t.decreasing.verdict == Verdict::holds_strict);
  RootRatioTrend far = root_ratio_trend(R(), {99, 100}, 8);
  CHECK(far.rows.back().value == "1.00062390");
  CHECK(far.distance_to_one == "0.00062390");
}

TEST_CASE("bound function") {
  const BoundFunction b = reference_bound();
  CHECK(eval_bound(b, 3) == QuadNumber(BigRational(BigInt(3), BigInt(2)), BigRational(1)));
  CHECK(to_fixed(eval_bound(b, 7), 5) == "4.57948");
  CHECK(eval_bound(b, 4) - eval_bound(b, 3) == -b.c1 / QuadNumber(12));
  CHECK(b == reference_bound_fraction_form());
  CHECK_THROWS_AS(eval_bound(b, 0), std::domain_error);
  CHECK(eval_bound(shifted(b, -1), 9) == eval_bound(b, 8));
}

TEST_CASE("limit enclosure") {
  EnclosureResult tail = limit_enclosure(R(), reference_bound(), {3, 1000}, EnclosureRadius::tail_gap);
  CHECK(tail.check.verdict == Verdict::holds_strict);
  EnclosureResult width = limit_enclosure(R(), reference_bound(), {3, 1000}, EnclosureRadius::interval_width);
  CHECK(width.check.verdict == Verdict::fails);  // see the README: the interval width is too small a radius
  CHECK(*width.check.first_violation == 3);
  CHECK(width.radius_at_hi == -reference_bound().c1 / QuadNumber(1000 * 1001));
  CHECK_THROWS_AS(limit_enclosure(R(), shifted(reference_bound(), 1), {3, 4}, EnclosureRadius::tail_gap),
                  std::domain_error);
}

TEST_CASE("L operator and the explorer") {
  TermStore l = l_operator(R().slice(0, 10));
  CHECK(l.first_index() == 1);
  CHECK(l[6] == BigInt(-127448));
  const TermStore flat = l_operator(from({1, 1, 1, 1}));
  const TermStore geometric = l_operator(from({1, 2, 4, 8}));
  for (const auto& z : flat.terms()) CHECK(z.is_zero());
  for (const auto& z : geometric.terms()) CHECK(z.is_zero());
  CHECK_THROWS_AS(l_operator(from({1, 2})), std::invalid_argument);

  std::vector<BigInt> row;
  for (int k = 0; k <= 10; ++k) row.push_back(binomial(10, k));
  ExplorerLedger toy = explore_infinite_log_concavity(TermStore("binom10", 0, row), 0, 1, 11);
  REQUIRE(toy.depths.size() == 2);
  CHECK(toy.depths[0].nonnegative());
  CHECK(toy.depths[1].nonnegative());
  CHECK(toy.label == "bounded-depth evidence");

  CHECK_THROWS_AS(explore_infinite_log_concavity(from({1, 2, 3, 4}), 0, 3, 4), std::invalid_argument);

  TermStore base = l_operator(R().slice(0, 120));
  ExplorerLedger raw = explore_infinite_log_concavity(base, 6, 0, 101);
  CHECK(raw.depths[0].negatives == 101);
  ExplorerLedger abs = explore_infinite_log_concavity(absolute_values(base), 6, 5, 101, "abs");
  CHECK(abs.depths.size() == 6);
  CHECK(abs.depths[0].positive());
  CHECK(abs.depths[5].range.lo == 11);
}
