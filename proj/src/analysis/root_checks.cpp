#include "logcert/analysis/root_checks.hpp"

#include "logcert/analysis/log_shape.hpp"
#include "logcert/exact/decimal.hpp"
#include "logcert/exact/roots.hpp"

#include <stdexcept>

namespace logcert {

namespace {

int sign_of(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return -1;
  if (o == std::strong_ordering::greater) return 1;
  return 0;
}

std::uint64_t u(std::int64_t n) { return static_cast<std::uint64_t>(n); }

void require_index_from_one(IndexRange range, const char* what) {
  if (range.lo < 1) {
    throw std::invalid_argument(std::string(what) + ": root indices start at n=1, got " + std::to_string(range.lo));
  }
}

}  // namespace

CheckResult check_root_monotone(const TermStore& store, IndexRange range, Direction direction,
                                const CheckOptions& options) {
  range.validate("root-monotone");
  require_index_from_one(range, "root-monotone");
  store.require(range.lo, range.hi + 1, "root-monotone check");
  require_positive(store, range.lo, range.hi + 1, "root-monotone check");
  auto sign = [&](std::int64_t n) {
    return sign_of(pow_cmp(store[n], u(n + 1), store[n + 1], u(n)));
  };
  auto witness = [&](std::int64_t n) {
    return Comparison{n, pow(store[n], u(n + 1)), pow(store[n + 1], u(n))};
  };
  const bool up = direction == Direction::increasing;
  return run_pointwise(store.name() + " n-th roots " + std::string(to_string(direction)),
                       up ? "z[n]^(n+1) < z[n+1]^n" : "z[n]^(n+1) > z[n+1]^n", range, up ? -1 : 1, options, sign,
                       witness);
}

CheckResult check_root_log_concave(const TermStore& store, IndexRange range, bool allow_large,
                                   const CheckOptions& options) {
  range.validate("root-log-concave");
  require_index_from_one(range, "root-log-concave");
  if (range.hi > kRootLogConcaveCap && !allow_large) {
    throw std::invalid_argument("root-log-concave: n up to " + std::to_string(range.hi) + " exceeds the default cap of " +
                                std::to_string(kRootLogConcaveCap) + "; pass --allow-large to run it");
  }
  store.require(range.lo, range.hi + 2, "root-log-concavity check");
  require_positive(store, range.lo, range.hi + 2, "root-log-concavity check");
  auto sides = [&](std::int64_t n) {
    BigInt lhs = pow(store[n + 1], u(2 * n * (n + 2)));
    BigInt rhs = pow(store[n], u((n + 1) * (n + 2))) * pow(store[n + 2], u(n * (n + 1)));
    return std::pair{std::move(lhs), std::move(rhs)};
  };
  auto sign = [&](std::int64_t n) {
    auto [lhs, rhs] = sides(n);
    return sign_of(lhs <=> rhs);
  };
  auto witness = [&](std::int64_t n) {
    auto [lhs, rhs] = sides(n);
    return Comparison{n, std::move(lhs), std::move(rhs)};
  };
  return run_pointwise(store.name() + " n-th roots log-concave",
                       "z[n+1]^(2n(n+2)) > z[n]^((n+1)(n+2)) * z[n+2]^(n(n+1))", range, 1, options, sign,
                       witness);
}

RootRatioTrend root_ratio_trend(const TermStore& store, IndexRange range, int digits) {
  range.validate("root-ratio-trend");
  require_index_from_one(range, "root-ratio-trend");
  if (digits < 1) throw std::invalid_argument("root-ratio-trend: digits must be positive");
  store.require(range.lo, range.hi + 1, "root-ratio trend");
  require_positive(store, range.lo, range.hi + 1, "root-ratio trend");

  // floor(rho_n * 10^(digits+guard)); rho_n^(n(n+1)) = z_{n+1}^n / z_n^(n+1).
  const auto scale = u(digits + kRootGuardDigits);
  std::vector<BigInt> floors;
  std::vector<BigInt> rounded;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    BigRational power(pow(store[n + 1], u(n)), pow(store[n], u(n + 1)));
    floors.push_back(floor_root_scaled(power, u(n * (n + 1)), scale));
    rounded.push_back(round_from_floor(floors.back(), kRootGuardDigits));
  }

  RootRatioTrend trend{.digits = digits};
  const BigInt unit = pow10(u(digits));
  for (std::size_t i = 0; i < floors.size(); ++i) {
    RootRatioRow row{.n = range.lo + static_cast<std::int64_t>(i), .value = format_scaled(rounded[i], digits)};
    if (i + 1 < floors.size()) {
      // Both floors are within one guard unit of the truth, so the rounded
      // difference is within one unit of the last printed digit.
      BigInt d = floors[i] - floors[i + 1];
      BigInt mag = round_from_floor(d.abs(), kRootGuardDigits);
      row.difference = format_scaled(mag, digits, d.sign() < 0);
    }
    trend.rows.push_back(std::move(row));
  }

  IndexRange pairs{range.lo, range.hi == range.lo ? range.lo : range.hi - 1};
  auto at = [&](std::int64_t n) { return static_cast<std::size_t>(n - range.lo); };
  auto sign = [&](std::int64_t n) {
    if (at(n) + 1 >= rounded.size()) return 1;
    return (rounded[at(n)] - rounded[at(n) + 1]).sign();
  };
  auto witness = [&](std::int64_t n) {
    BigRational next = at(n) + 1 < rounded.size() ? BigRational(rounded[at(n) + 1], unit) : BigRational(0);
    return Comparison{n, BigRational(rounded[at(n)], unit), next};
  };
  trend.decreasing = run_pointwise(store.name() + " root ratios decreasing (printed to " + std::to_string(digits) +
                                       " decimals)",
                                   "rho[n] > rho[n+1]", pairs, 1, {}, sign, witness);
  trend.decreasing.range = range;

  BigInt dist = rounded.back() - unit;
  trend.distance_to_one = format_scaled(dist.abs(), digits, dist.sign() < 0);
  trend.distance_to_one_exact_bound = BigRational(dist.abs() + BigInt(1), unit);
  return trend;
}

EnclosureResult limit_enclosure(const TermStore& store, const BoundFunction& bound, IndexRange range,
                                EnclosureRadius radius) {
  range.validate("limit-enclosure");
  store.require(range.lo, range.hi + 1, "limit enclosure");
  require_positive(store, range.lo, range.hi + 1, "limit enclosure");
  const QuadNumber limit = bound.c0;

  auto ratio = [&](std::int64_t n) { return QuadNumber(BigRational(store[n + 1], store[n])); };
  auto radius_at = [&](std::int64_t n) {
    return radius == EnclosureRadius::interval_width ? eval_bound(bound, n + 1) - eval_bound(bound, n)
                                                     : limit - eval_bound(bound, n);
  };
  auto distance_at = [&](std::int64_t n) {
    QuadNumber d = ratio(n) - limit;
    return quad_sign(d) < 0 ? -d : d;
  };

  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    QuadNumber r = ratio(n);
    if (quad_sign(r - eval_bound(bound, n)) <= 0 || quad_sign(eval_bound(bound, n + 1) - r) <= 0) {
      throw std::domain_error("limit enclosure: interlacing b(n) < r_n < b(n+1) fails at n=" + std::to_string(n));
    }
  }

  auto sign = [&](std::int64_t n) { return quad_sign(radius_at(n) - distance_at(n)); };
  auto witness = [&](std::int64_t n) { return Comparison{n, radius_at(n), distance_at(n)}; };
  const char* relation = radius == EnclosureRadius::interval_width ? "|r[n] - L| <= b(n+1) - b(n)"
                                                                   : "|r[n] - L| <= L - b(n)";
  EnclosureResult out{
      .check = run_pointwise(store.name() + " ratio limit enclosure", relation, range, 1, {.strict = false}, sign,
                             witness),
      .limit = limit,
      .radius_at_hi = radius_at(range.hi),
      .distance_at_hi = distance_at(range.hi)};
  return out;
}

}  // namespace logcert
