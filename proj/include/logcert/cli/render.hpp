#pragma once

// Deterministic text rendering of tables, checks and certificate ledgers.

#include "logcert/analysis/check_result.hpp"
#include "logcert/analysis/explorer.hpp"
#include "logcert/exact/certificate.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logcert {

enum class Format { plain, markdown, csv };
std::optional<Format> parse_format(std::string_view text);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& table, Format format);

/// Exact witness text; integers longer than `max_digits` are elided in the
/// middle with their digit count.
std::string witness_exact(const ExactValue& v, std::size_t max_digits = 80);

/// One row per step: id, status, scope, anchor, exact witness, decimal witness.
/// An empty report renders its header only.
std::string render_report(const CertificateReport& report, Format format);

std::string render_check(const CheckResult& result, Format format);

std::string render_ledger(const ExplorerLedger& ledger, Format format);

}  // namespace logcert
