#pragma once

// Certificates that a polynomial keeps one sign on [k0, infinity).

#include "logcert/exact/certificate.hpp"
#include "logcert/proof/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace logcert {

enum class SignMethod { shift_test, vertex, none };
std::string_view to_string(SignMethod m);

struct SignCertificate {
  CertificateStatus status = CertificateStatus::inconclusive;  // certified or inconclusive
  SignMethod method = SignMethod::none;
  int sign = 0;         // +1 or -1 when certified; the sign p takes away from its zeros
  bool strict = false;  // true when p(k) != 0 for every real k >= k0
  std::optional<QuadNumber> zero_at;  // the single zero on [k0, inf) when not strict
  std::optional<QuadNumber> vertex;   // -b/(2a) for quadratics
  QuadNumber value_at_k0;
  CertificateReport report;

  [[nodiscard]] bool certified() const { return status == CertificateStatus::certified; }
  /// "positive", "negative", "nonnegative, zero at x=10", or "inconclusive".
  [[nodiscard]] std::string summary(std::string_view var = "x") const;
};

/// Tries the shift test (every coefficient of p(x + k0) has one sign), then
/// for quadratics the vertex argument. Neither applying is reported as
/// inconclusive; the range is never widened silently.
/// Throws std::invalid_argument for the zero polynomial.
SignCertificate sign_beyond(const QuadPolynomial& p, const BigRational& k0, std::string_view name = "p",
                            std::string_view var = "x");

}  // namespace logcert
