#include "logcert/cli/render.hpp"

#include <algorithm>
#include <sstream>

namespace logcert {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "plain") return Format::plain;
  if (text == "markdown" || text == "md") return Format::markdown;
  if (text == "csv") return Format::csv;
  return std::nullopt;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

// Display width, counting each UTF-8 code point once (for √ and friends).
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

}  // namespace

std::string render_table(const Table& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
      };
      line(table.header);
      for (const auto& row : table.rows) line(row);
      break;
    }
    case Format::markdown: {
      auto line = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (const auto& c : cells) out << ' ' << md_cell(c) << " |";
        out << '\n';
      };
      line(table.header);
      out << '|';
      for (std::size_t i = 0; i < table.header.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& row : table.rows) line(row);
      break;
    }
    case Format::plain: {
      std::vector<std::size_t> w(table.header.size(), 0);
      auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < w.size(); ++i) w[i] = std::max(w[i], width(cells[i]));
      };
      widen(table.header);
      for (const auto& row : table.rows) widen(row);
      auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) text += " | ";
          text += cells[i];
          if (i + 1 < cells.size() && i < w.size()) text.append(w[i] - width(cells[i]), ' ');
        }
        out << text << '\n';
      };
      line(table.header);
      for (const auto& row : table.rows) line(row);
      break;
    }
  }
  return out.str();
}

std::string witness_exact(const ExactValue& v, std::size_t max_digits) {
  std::string s = exact_string(v);
  if (s.size() <= max_digits) return s;
  const std::size_t keep = max_digits / 2 - 4;
  std::string shown = s.substr(0, keep) + "..." + s.substr(s.size() - keep);
  if (std::holds_alternative<BigInt>(v)) {
    const std::size_t digits = s.size() - (s.front() == '-' ? 1 : 0);
    return shown + " (" + std::to_string(digits) + " digits)";
  }
  return shown + " (" + std::to_string(s.size()) + " chars)";
}

std::string render_report(const CertificateReport& report, Format format) {
  Table t;
  if (format == Format::csv) {
    t.header = {"claim", "step", "status", "n", "scope", "witness", "decimal"};
  } else {
    t.header = {"step", "status", "n", "scope", "anchor", "description", "witness", "decimal"};
  }
  for (const CertificateStep& s : report.steps) {
    std::string exact = s.witness ? witness_exact(*s.witness) : "";
    std::string dec = s.witness ? decimal_string(*s.witness) : "";
    std::string n = s.index ? std::to_string(*s.index) : "";
    if (format == Format::csv) {
      t.rows.push_back({report.claim, s.id, std::string(to_string(s.status)), n, s.scope, exact, dec});
    } else {
      t.rows.push_back({s.id, std::string(to_string(s.status)), n, s.scope, s.anchor, s.description, exact, dec});
    }
  }
  std::ostringstream out;
  switch (format) {
    case Format::csv:
      return render_table(t, format);
    case Format::markdown:
      out << "## " << report.claim << "\n\nstatus: **" << to_string(report.status) << "**\n\n";
      out << render_table(t, format);
      return out.str();
    case Format::plain:
      out << "claim: " << report.claim << "\nstatus: " << to_string(report.status) << '\n';
      for (const CertificateStep& s : report.steps) {
        out << "  [" << to_string(s.status) << "] " << s.id;
        if (s.index) out << " (n=" << *s.index << ')';
        out << ": " << s.description;
        if (!s.scope.empty()) out << "; " << s.scope;
        if (s.witness) out << "; witness " << witness_exact(*s.witness) << " ~ " << decimal_string(*s.witness);
        out << '\n';
      }
      return out.str();
  }
  return {};
}

std::string render_check(const CheckResult& result, Format format) {
  Table t{{"n", "lhs", "rhs", "lhs - rhs", "decimal"}, {}};
  auto row = [&](const Comparison& c) {
    ExactValue d = c.difference();
    t.rows.push_back(
        {std::to_string(c.index), witness_exact(c.lhs), witness_exact(c.rhs), witness_exact(d), decimal_string(d)});
  };
  for (const Comparison& c : result.recorded) row(c);
  if (result.witness) row(*result.witness);

  std::ostringstream out;
  std::string verdict(to_string(result.verdict));
  if (format == Format::csv) {
    out << "property,relation,range,verdict,first_violation\n"
        << csv_field(result.property) << ',' << csv_field(result.relation) << ','
        << csv_field(result.range.to_string()) << ',' << verdict << ','
        << (result.first_violation ? std::to_string(*result.first_violation) : "") << '\n';
    if (!t.rows.empty()) out << render_table(t, format);
    return out.str();
  }
  if (format == Format::markdown) out << "## ";
  out << result.property << '\n';
  out << "relation: " << result.relation << '\n';
  out << "range: " << result.range.to_string() << '\n';
  out << "verdict: " << verdict;
  if (result.first_violation) out << " at n=" << *result.first_violation;
  out << '\n';
  if (!t.rows.empty()) out << '\n' << render_table(t, format);
  return out.str();
}

std::string render_ledger(const ExplorerLedger& ledger, Format format) {
  Table t{{"depth", "range", "negative", "zero", "nonnegative", "first negative"}, {}};
  for (const DepthVerdict& d : ledger.depths) {
    t.rows.push_back({std::to_string(d.depth), d.range.to_string(), std::to_string(d.negatives),
                      std::to_string(d.zeros), d.nonnegative() ? "yes" : "no",
                      d.first_negative ? std::to_string(*d.first_negative) : ""});
  }
  std::ostringstream out;
  if (format != Format::csv) {
    if (format == Format::markdown) out << "## ";
    out << ledger.sequence << " (" << ledger.convention << " convention, " << ledger.label << ")\n";
  }
  out << render_table(t, format);
  return out.str();
}

}  // namespace logcert
