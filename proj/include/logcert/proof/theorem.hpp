#pragma once

// The full ledger for R: ratio monotonicity from n=3, the limit of the
// ratios, monotone n-th roots, and log-concave n-th roots from n=5. Also the
// bounded evidence for the two open conjectures.

#include "logcert/analysis/explorer.hpp"
#include "logcert/exact/certificate.hpp"
#include "logcert/proof/xia.hpp"
#include "logcert/sequence/definition.hpp"
#include "logcert/sequence/term_store.hpp"

#include <vector>

namespace logcert {

struct TheoremOptions {
  std::int64_t horizon = 200;
  std::int64_t base_from = 3;
  std::int64_t base_to = 8;
  BigRational k0 = BigRational(4);
  std::int64_t N0 = 9;
  std::int64_t trend_to = 30;  // root-ratio trend rows, evidence only
  int trend_digits = 8;
  /// Definition whose recurrence and direct sum the store is checked against.
  SequenceDef definition = builtin_R();
};

/// Smallest horizon accepted: the ratio witness r_11 needs z_12.
inline constexpr std::int64_t kMinTheoremHorizon = 12;

/// Composes every certificate into one ledger. Store must cover [0, horizon+2].
/// If the recurrence or the direct-sum check is refuted the ledger stops there.
/// Throws std::invalid_argument for horizon < kMinTheoremHorizon.
CertificateReport assemble_theorem_report(const TermStore& store, const TheoremOptions& options = {});

struct ConjectureOptions {
  std::int64_t ratio_from = 4;  // first index of {r_n}; inequalities run on [from+1, to]
  std::int64_t ratio_to = 200;
  std::int64_t explorer_start = 6;
  std::int64_t explorer_window = 101;
  int explorer_depth = 5;
};

struct ConjectureEvidence {
  CertificateReport report;  // status evidence-only unless something is refuted
  std::vector<ExplorerLedger> ledgers;  // raw and abs conventions
};

/// Store must cover [0, max(ratio_to + 2, explorer_start + explorer_window)].
ConjectureEvidence conjecture_evidence(const TermStore& store, const ConjectureOptions& options = {});

}  // namespace logcert
