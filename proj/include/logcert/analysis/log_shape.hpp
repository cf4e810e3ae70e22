#pragma once

// Log-convexity / log-concavity and the equivalent ratio-monotonicity view,
// all decided by integer cross-products.

#include "logcert/analysis/check_result.hpp"
#include "logcert/sequence/term_store.hpp"

namespace logcert {

/// Compares z[n-1]*z[n+1] with z[n]^2 for n in range. Store must cover [lo-1, hi+1].
CheckResult check_log_shape(const TermStore& store, IndexRange range, Shape shape, bool strict = true);

/// Compares r_n with r_{n+1} for n in [lo, hi-1], where r_n = z[n+1]/z[n]; the
/// witnesses are the two ratios. Store must cover [lo, hi+1] with positive terms.
CheckResult check_ratio_monotone(const TermStore& store, IndexRange range, Direction direction,
                                 bool strict = true);

/// r_n^2 against r_{n-1}*r_{n+1}, i.e. z[n+1]^3*z[n-1] against z[n]^3*z[n+2].
/// Store must cover [lo-1, hi+2] with positive terms.
CheckResult check_ratio_log_concave(const TermStore& store, IndexRange range, bool strict = true);

/// Throws std::domain_error naming the first index in [lo, hi] with z_n <= 0.
void require_positive(const TermStore& store, std::int64_t lo, std::int64_t hi, const std::string& what);

}  // namespace logcert
