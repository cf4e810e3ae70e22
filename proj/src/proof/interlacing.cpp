#include "logcert/proof/interlacing.hpp"

#include "logcert/analysis/check_result.hpp"
#include "logcert/analysis/log_shape.hpp"

namespace logcert {

CertificateReport check_interlacing(const TermStore& store, const BoundFunction& b, std::int64_t from,
                                    std::int64_t to) {
  IndexRange{from, to}.validate("interlacing");
  store.require(from, to + 1, "interlacing check");
  require_positive(store, from, to + 1, "interlacing check");
  const std::string scope = IndexRange{from, to}.to_string();
  CertificateReport report{"b(n) < " + store.name() + "[n+1]/" + store.name() + "[n] < b(n+1) on " + scope};

  QuadNumber lower = eval_bound(b, from);
  for (std::int64_t n = from; n <= to; ++n) {
    QuadNumber upper = eval_bound(b, n + 1);
    QuadNumber r(BigRational(store[n + 1], store[n]));
    QuadNumber below = r - lower;
    QuadNumber above = upper - r;
    const bool low_ok = quad_sign(below) > 0;
    const bool high_ok = quad_sign(above) > 0;
    if (!low_ok || !high_ok) {
      report.add({.id = "interlacing",
                  .description = low_ok ? "r_n >= b(n+1): upper bound violated" : "r_n <= b(n): lower bound violated",
                  .status = CertificateStatus::refuted,
                  .scope = scope,
                  .anchor = "ratio-bound lemma",
                  .witness = low_ok ? above : below,
                  .index = n});
      return report;
    }
    report.add({.id = "interlacing",
                .description = "b(n) < r_n < b(n+1)",
                .scope = "n = " + std::to_string(n),
                .anchor = "ratio-bound lemma",
                .witness = quad_sign(below - above) < 0 ? below : above,
                .index = n});
    lower = std::move(upper);
  }
  return report;
}

std::vector<Table1Row> table1_rows(const TermStore& store, const BoundFunction& b, std::int64_t from,
                                   std::int64_t to) {
  IndexRange{from, to}.validate("table1");
  store.require(from, to + 1, "table1");
  std::vector<Table1Row> rows;
  for (std::int64_t n = from; n <= to; ++n) {
    rows.push_back({.n = n, .b_next = eval_bound(b, n + 1), .r = BigRational(store[n + 1], store[n]),
                    .b = eval_bound(b, n)});
  }
  return rows;
}

}  // namespace logcert
