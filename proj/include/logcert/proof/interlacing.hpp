#pragma once

// The sandwich certificate b(n) < r_n < b(n+1), checked exactly in Q(sqrt 2).

#include "logcert/analysis/bound.hpp"
#include "logcert/exact/certificate.hpp"
#include "logcert/sequence/term_store.hpp"

#include <cstdint>
#include <vector>

namespace logcert {

/// Certifies b(n) < z[n+1]/z[n] < b(n+1) for n in [from, to]. One step per n
/// with id "interlacing" and witness min(r_n - b(n), b(n+1) - r_n); refuted at
/// the first violation, whose witness is the offending signed margin.
/// Store must cover [from, to+1] with positive terms.
CertificateReport check_interlacing(const TermStore& store, const BoundFunction& b, std::int64_t from,
                                    std::int64_t to);

struct Table1Row {
  std::int64_t n = 0;
  QuadNumber b_next;  // b(n+1)
  BigRational r;      // r_n
  QuadNumber b;       // b(n)
};

/// The rows b(n+1), r_n, b(n) for n in [from, to], in that column order.
std::vector<Table1Row> table1_rows(const TermStore& store, const BoundFunction& b, std::int64_t from,
                                   std::int64_t to);

}  // namespace logcert
