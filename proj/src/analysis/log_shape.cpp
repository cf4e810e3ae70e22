#include "logcert/analysis/log_shape.hpp"

#include <stdexcept>

namespace logcert {

void require_positive(const TermStore& store, std::int64_t lo, std::int64_t hi, const std::string& what) {
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (store[n].sign() <= 0) {
      throw std::domain_error(what + ": " + store.name() + " has a non-positive term at n=" + std::to_string(n) +
                              " (" + store[n].to_string() + ")");
    }
  }
}

CheckResult check_log_shape(const TermStore& store, IndexRange range, Shape shape, bool strict) {
  range.validate("log-shape");
  store.require(range.lo - 1, range.hi + 1, "log-shape check");
  auto witness = [&](std::int64_t n) {
    return Comparison{n, store[n - 1] * store[n + 1], store[n] * store[n]};
  };
  auto sign = [&](std::int64_t n) {
    BigInt d = store[n - 1] * store[n + 1] - store[n] * store[n];
    return d.sign();
  };
  const char* relation = shape == Shape::convex ? "z[n-1]*z[n+1] > z[n]^2" : "z[n-1]*z[n+1] < z[n]^2";
  return run_pointwise(store.name() + " log-" + std::string(to_string(shape)), relation, range,
                       shape == Shape::convex ? 1 : -1, {.strict = strict}, sign, witness);
}

CheckResult check_ratio_monotone(const TermStore& store, IndexRange range, Direction direction, bool strict) {
  range.validate("ratio-monotone");
  if (range.lo == range.hi) throw std::invalid_argument("ratio-monotone: need at least two ratios to compare");
  store.require(range.lo, range.hi + 1, "ratio-monotone check");
  require_positive(store, range.lo, range.hi + 1, "ratio-monotone check");
  // r_n < r_{n+1}  <=>  z[n+1]^2 < z[n]*z[n+2]
  auto sign = [&](std::int64_t n) {
    return (store[n + 1] * store[n + 1] - store[n] * store[n + 2]).sign();
  };
  auto witness = [&](std::int64_t n) {
    return Comparison{n, BigRational(store[n + 1], store[n]), BigRational(store[n + 2], store[n + 1])};
  };
  const bool up = direction == Direction::increasing;
  IndexRange pairs{range.lo, range.hi - 1};
  auto result = run_pointwise(store.name() + " ratios " + std::string(to_string(direction)),
                       up ? "r[n] < r[n+1]" : "r[n] > r[n+1]", pairs, up ? -1 : 1, {.strict = strict}, sign,
                              witness);
  result.range = range;
  return result;
}

CheckResult check_ratio_log_concave(const TermStore& store, IndexRange range, bool strict) {
  range.validate("ratio-log-concave");
  store.require(range.lo - 1, range.hi + 2, "ratio-log-concavity check");
  require_positive(store, range.lo - 1, range.hi + 2, "ratio-log-concavity check");
  auto witness = [&](std::int64_t n) {
    return Comparison{n, pow(store[n + 1], 3) * store[n - 1], pow(store[n], 3) * store[n + 2]};
  };
  auto sign = [&](std::int64_t n) {
    return (pow(store[n + 1], 3) * store[n - 1] - pow(store[n], 3) * store[n + 2]).sign();
  };
  return run_pointwise(store.name() + " ratio log-concave", "z[n+1]^3*z[n-1] > z[n]^3*z[n+2]", range, 1,
                       {.strict = strict}, sign, witness);
}

}  // namespace logcert
