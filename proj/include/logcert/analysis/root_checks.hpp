#pragma once

// n-th root monotonicity and log-concavity, decided by integer power
// comparisons (pow_cmp). Decimal roots appear only in root_ratio_trend.

#include "logcert/analysis/bound.hpp"
#include "logcert/analysis/check_result.hpp"
#include "logcert/sequence/term_store.hpp"

#include <string>
#include <vector>

namespace logcert {

/// z_n^(1/n) against z_{n+1}^(1/(n+1)) via pow_cmp(z_n, n+1, z_{n+1}, n), for
/// n in range (n >= 1). Store must cover [lo, hi+1] with positive terms.
/// Recorded comparisons are (z_n^(n+1), z_{n+1}^n).
CheckResult check_root_monotone(const TermStore& store, IndexRange range, Direction direction,
                                const CheckOptions& options = {});

/// Default upper index for check_root_log_concave without allow_large.
inline constexpr std::int64_t kRootLogConcaveCap = 60;

/// rho_n > rho_{n+1} for n in range, where rho_n = z_{n+1}^(1/(n+1)) / z_n^(1/n);
/// this is strict log-concavity of the root sequence centred at n+1. Decided by
/// z_{n+1}^(2n(n+2)) against z_n^((n+1)(n+2)) * z_{n+2}^(n(n+1)).
/// Store must cover [lo, hi+2]. Throws std::invalid_argument past the cap
/// unless allow_large is set.
CheckResult check_root_log_concave(const TermStore& store, IndexRange range, bool allow_large = false,
                                   const CheckOptions& options = {});

struct RootRatioRow {
  std::int64_t n = 0;
  std::string value;       // rho_n to `digits` decimals
  std::string difference;  // rho_n - rho_{n+1}; empty on the last row
};

struct RootRatioTrend {
  int digits = 0;
  std::vector<RootRatioRow> rows;
  CheckResult decreasing;         // over the printed values
  std::string distance_to_one;    // rho_hi - 1 at the right endpoint
  BigRational distance_to_one_exact_bound;  // |rho_hi - 1| rounded up to `digits` decimals
};

/// Decimal rendering of rho_n for n in range; checks the printed sequence is
/// strictly decreasing. Store must cover [lo, hi+1] with positive terms.
RootRatioTrend root_ratio_trend(const TermStore& store, IndexRange range, int digits);

enum class EnclosureRadius {
  interval_width,  // b(n+1) - b(n)
  tail_gap,        // c0 - b(n) = -c1/n
};

struct EnclosureResult {
  CheckResult check;
  QuadNumber limit;
  QuadNumber radius_at_hi;
  QuadNumber distance_at_hi;  // |r_hi - limit|
};

/// Certifies |r_n - c0| <= radius(n) for n in range, where c0 is the bound's
/// limit. Interlacing b(n) < r_n < b(n+1) is re-checked first; a violation
/// throws std::domain_error.
EnclosureResult limit_enclosure(const TermStore& store, const BoundFunction& bound, IndexRange range,
                                EnclosureRadius radius);

}  // namespace logcert
