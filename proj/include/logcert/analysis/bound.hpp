#pragma once

#include "logcert/exact/quad.hpp"

#include <cstdint>

namespace logcert {

/// b(n) = c0 + c1/n with coefficients in Q(sqrt 2).
struct BoundFunction {
  QuadNumber c0;
  QuadNumber c1;

  /// The same shape shifted in n: b'(n) = b(n + shift). Only shift 0 keeps the
  /// c0 + c1/n form, so shifted bounds are evaluated through eval_bound.
  std::int64_t shift = 0;

  friend bool operator==(const BoundFunction&, const BoundFunction&) = default;
};

/// Exact c0 + c1/(n + shift). Throws std::domain_error when n + shift <= 0.
QuadNumber eval_bound(const BoundFunction& b, std::int64_t n);

/// The ratio bound for R: 3 + 2*sqrt2 - (9/2 + 3*sqrt2)/n.
BoundFunction reference_bound();

/// The same bound written as c0 - 3(41*sqrt2 + 58)/((14*sqrt2 + 20) n).
BoundFunction reference_bound_fraction_form();

/// f(n) = b(n - 1), the parameter of the root-log-concavity criterion.
BoundFunction shifted(const BoundFunction& b, std::int64_t by);

}  // namespace logcert
