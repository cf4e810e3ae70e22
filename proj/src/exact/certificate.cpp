#include "logcert/exact/certificate.hpp"

#include "logcert/exact/decimal.hpp"

namespace logcert {

QuadNumber to_quad(const ExactValue& v) {
  return std::visit([](const auto& x) { return QuadNumber(x); }, v);
}

std::string exact_string(const ExactValue& v) {
  struct Visitor {
    std::string operator()(const BigInt& x) const { return x.to_string(); }
    std::string operator()(const BigRational& x) const { return x.to_string(); }
    std::string operator()(const QuadNumber& x) const { return to_string(x); }
  };
  return std::visit(Visitor{}, v);
}

std::string decimal_string(const ExactValue& v, int significant) {
  return to_general(to_quad(v), significant);
}

std::string_view to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::certified: return "certified";
    case CertificateStatus::refuted: return "refuted";
    case CertificateStatus::evidence_only: return "evidence-only";
    case CertificateStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

void CertificateReport::add(CertificateStep step) {
  if (step.status == CertificateStatus::refuted) {
    status = CertificateStatus::refuted;
  } else if (step.status == CertificateStatus::inconclusive && status != CertificateStatus::refuted) {
    status = CertificateStatus::inconclusive;
  }
  steps.push_back(std::move(step));
}

void CertificateReport::absorb(const CertificateReport& other, std::string_view prefix) {
  for (CertificateStep step : other.steps) {
    if (!prefix.empty()) step.id = std::string(prefix) + "." + step.id;
    add(std::move(step));
  }
}

const CertificateStep* CertificateReport::find(std::string_view id) const {
  for (const auto& s : steps) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const CertificateStep* CertificateReport::first_refuted() const {
  for (const auto& s : steps) {
    if (s.status == CertificateStatus::refuted) return &s;
  }
  return nullptr;
}

}  // namespace logcert
