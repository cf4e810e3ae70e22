#include "logcert/analysis/bound.hpp"

#include <stdexcept>
#include <string>

namespace logcert {

QuadNumber eval_bound(const BoundFunction& b, std::int64_t n) {
  const std::int64_t m = n + b.shift;
  if (m <= 0) {
    throw std::domain_error("bound function evaluated at n=" + std::to_string(n) + " (argument " +
                            std::to_string(m) + " must be positive)");
  }
  return b.c0 + b.c1 / QuadNumber(m);
}

BoundFunction reference_bound() {
  const QuadNumber sqrt2 = QuadNumber::sqrt2();
  return {.c0 = QuadNumber(3) + QuadNumber(2) * sqrt2,
          .c1 = -(QuadNumber(BigRational(9, 2)) + QuadNumber(3) * sqrt2)};
}

BoundFunction reference_bound_fraction_form() {
  const QuadNumber sqrt2 = QuadNumber::sqrt2();
  QuadNumber numer = QuadNumber(3) * (QuadNumber(41) * sqrt2 + QuadNumber(58));
  QuadNumber denom = QuadNumber(14) * sqrt2 + QuadNumber(20);
  return {.c0 = QuadNumber(3) + QuadNumber(2) * sqrt2, .c1 = -(numer / denom)};
}

BoundFunction shifted(const BoundFunction& b, std::int64_t by) {
  BoundFunction out = b;
  out.shift += by;
  return out;
}

}  // namespace logcert
