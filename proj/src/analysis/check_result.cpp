#include "logcert/analysis/check_result.hpp"

#include <stdexcept>

namespace logcert {

void IndexRange::validate(std::string_view what) const {
  if (lo > hi) {
    throw std::invalid_argument(std::string(what) + ": empty range, from " + std::to_string(lo) +
                                " exceeds to " + std::to_string(hi));
  }
}

std::string IndexRange::to_string() const {
  return "n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_strict: return "holds_strict";
    case Verdict::holds_weak: return "holds_weak";
    case Verdict::fails: return "fails";
  }
  return "fails";
}

std::string_view to_string(Shape s) { return s == Shape::convex ? "convex" : "concave"; }
std::string_view to_string(Direction d) { return d == Direction::increasing ? "increasing" : "decreasing"; }

ExactValue Comparison::difference() const {
  if (const auto* a = std::get_if<BigInt>(&lhs)) {
    if (const auto* b = std::get_if<BigInt>(&rhs)) return *a - *b;
  }
  if (!std::holds_alternative<QuadNumber>(lhs) && !std::holds_alternative<QuadNumber>(rhs)) {
    return to_quad(lhs).rational_part() - to_quad(rhs).rational_part();
  }
  return to_quad(lhs) - to_quad(rhs);
}

CheckResult run_pointwise(std::string property, std::string relation, IndexRange range, int want,
                          const CheckOptions& options, const std::function<int(std::int64_t)>& sign_at,
                          const std::function<Comparison(std::int64_t)>& witness_at) {
  range.validate(property);
  CheckResult result{.property = std::move(property), .relation = std::move(relation), .range = range};
  bool saw_equality = false;
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    int s = sign_at(n);
    if (n == range.lo) result.first = witness_at(n);
    if (options.record_through && n <= *options.record_through) result.recorded.push_back(witness_at(n));
    if (s == want) continue;
    if (s == 0 && !options.strict) {
      saw_equality = true;
      continue;
    }
    result.verdict = Verdict::fails;
    result.first_violation = n;
    result.witness = witness_at(n);
    return result;
  }
  result.verdict = saw_equality ? Verdict::holds_weak : Verdict::holds_strict;
  return result;
}

CertificateStep to_step(const CheckResult& result, std::string id, std::string anchor) {
  CertificateStep step{.id = std::move(id),
                       .description = result.property + ": " + result.relation,
                       .status = result.holds() ? CertificateStatus::certified : CertificateStatus::refuted,
                       .scope = result.range.to_string(),
                       .anchor = std::move(anchor)};
  if (const auto& c = result.witness ? result.witness : result.first) {
    step.witness = c->difference();
    step.index = c->index;
  }
  return step;
}

}  // namespace logcert
