#pragma once

// Outcome of a pointwise check over an index range. Each point compares two
// exact values; the property asks for lhs > rhs (or lhs < rhs) at every n.

#include "logcert/exact/certificate.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logcert {

struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  /// Throws std::invalid_argument when lo > hi.
  void validate(std::string_view what) const;
  [[nodiscard]] std::string to_string() const;
};

enum class Verdict { holds_strict, holds_weak, fails };
std::string_view to_string(Verdict v);

enum class Shape { convex, concave };
enum class Direction { increasing, decreasing };
std::string_view to_string(Shape s);
std::string_view to_string(Direction d);

struct Comparison {
  std::int64_t index = 0;
  ExactValue lhs;
  ExactValue rhs;

  /// lhs - rhs; stays an integer when both sides are.
  [[nodiscard]] ExactValue difference() const;
};

struct CheckResult {
  std::string property;
  std::string relation;  // the comparison made at each n, e.g. "z[n-1]*z[n+1] > z[n]^2"
  IndexRange range;
  Verdict verdict = Verdict::holds_strict;
  std::optional<std::int64_t> first_violation;
  std::optional<Comparison> witness;  // present iff the check fails
  std::vector<Comparison> recorded;   // comparisons kept for small n on request
  std::optional<Comparison> first;    // the comparison at range.lo, kept as a boundary witness

  [[nodiscard]] bool holds() const { return verdict != Verdict::fails; }
};

/// Which comparisons to keep in CheckResult::recorded.
struct CheckOptions {
  bool strict = true;
  std::optional<std::int64_t> record_through;
};

/// Drives a pointwise check. `sign_at(n)` is sign(lhs - rhs); `want` is the
/// sign the property asks for. Equality violates the property only when strict.
/// `witness_at` is called for the violating index and for recorded indices.
CheckResult run_pointwise(std::string property, std::string relation, IndexRange range, int want,
                          const CheckOptions& options, const std::function<int(std::int64_t)>& sign_at,
                          const std::function<Comparison(std::int64_t)>& witness_at);

/// One-step ledger view of a check: certified when it holds, refuted otherwise.
CertificateStep to_step(const CheckResult& result, std::string id, std::string anchor);

}  // namespace logcert
