#pragma once

// Structured pass/fail ledgers. Every witness is an exact value; decimals
// are produced only when a report is rendered.

#include "logcert/exact/bigint.hpp"
#include "logcert/exact/quad.hpp"
#include "logcert/exact/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace logcert {

using ExactValue = std::variant<BigInt, BigRational, QuadNumber>;

QuadNumber to_quad(const ExactValue& v);
std::string exact_string(const ExactValue& v);
std::string decimal_string(const ExactValue& v, int significant = 6);

enum class CertificateStatus { certified, refuted, evidence_only, inconclusive };

std::string_view to_string(CertificateStatus s);

struct CertificateStep {
  std::string id;           // stable key, e.g. "xia.iii"
  std::string description;  // human readable claim of this step
  CertificateStatus status = CertificateStatus::certified;
  std::string scope;        // "n in [3, 500]", "all n >= 9", ...
  std::string anchor;       // which part of the argument this step mirrors
  std::optional<ExactValue> witness;
  std::optional<std::int64_t> index;
};

struct CertificateReport {
  std::string claim;
  CertificateStatus status = CertificateStatus::certified;
  std::vector<CertificateStep> steps;

  /// Appends a step and folds its status in: refuted dominates, then
  /// inconclusive; evidence-only steps never change the report status.
  void add(CertificateStep step);

  /// Appends every step of `other` with ids prefixed by `prefix`.
  void absorb(const CertificateReport& other, std::string_view prefix = {});

  [[nodiscard]] bool certified() const { return status == CertificateStatus::certified; }
  [[nodiscard]] const CertificateStep* find(std::string_view id) const;
  [[nodiscard]] const CertificateStep* first_refuted() const;
};

}  // namespace logcert
