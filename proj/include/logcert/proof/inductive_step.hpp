#pragma once

// Symbolic part of the ratio-bound lemma: the two rational-function identities
// behind the induction, and sign certificates for their quadratic numerators.

#include "logcert/analysis/bound.hpp"
#include "logcert/exact/certificate.hpp"
#include "logcert/proof/rational_function.hpp"
#include "logcert/proof/sign_beyond.hpp"

#include <optional>

namespace logcert {

/// b(k + j) as a rational function of k.
QuadRationalFunction bound_as_function(const BoundFunction& b, std::int64_t j = 0);

/// -24(179+127√2)k^2 + 3(3146+2220√2)k - 3(1197+844√2)
QuadPolynomial inductive_quadratic_a();
/// (564+396√2)k^2 - (1557+1110√2)k - (654√2+915)
QuadPolynomial inductive_quadratic_b();

struct InductiveStepCertificate {
  CertificateReport report;
  QuadPolynomial quadratic_a;
  QuadPolynomial quadratic_b;
  QuadNumber a_at_3;  // quadratic (a) at k = 3
  QuadNumber b_at_4;  // quadratic (b) at k = 4
  std::optional<QuadNumber> vertex_a;
  std::optional<QuadNumber> vertex_b;
  SignCertificate sign_a;
  SignCertificate sign_b;
};

/// Checks, for the given bound:
///   (a) (7k+13)b_k b_{k+1} b_{k+2} - (7k+15)b_k b_{k+1} + (k+1)b_{k+2} - (k+3)b_k b_{k+1} b_{k+2} b_{k+3}
///       = quadratic_a / (16k(k+1)(k+2)),
///   (b) (7k+13)b_{k+1}b_{k+2} - (7k+15)b_{k+2} + (k+1) - (k+3)b_{k+1}b_{k+2}^2
///       = quadratic_b / (8(k+1)(k+2)^2),
/// then certifies quadratic (a) < 0 for k >= 3, quadratic (b) > 0 for k >= 4,
/// the denominators positive there, and b_k > 0 for k >= 3.
InductiveStepCertificate verify_inductive_step(const BoundFunction& b);

}  // namespace logcert
