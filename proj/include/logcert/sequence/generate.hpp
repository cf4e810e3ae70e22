#pragma once

// Term generation by direct summation and by recurrence, plus the exact
// consistency check between the two.

#include "logcert/exact/certificate.hpp"
#include "logcert/exact/rational.hpp"
#include "logcert/sequence/definition.hpp"
#include "logcert/sequence/term_store.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace logcert {

/// Raised when generation cannot proceed exactly: zero leading coefficient,
/// inexact division in a recurrence step, or disagreeing generation paths.
class SequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// binom(n, k) by the multiplicative formula with exact division; 0 outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Exact k-sum of the definition's summand at n. Throws DefinitionError when
/// the summand denominator vanishes or the final sum is not an integer.
BigInt eval_binomial_sum(const SequenceDef& def, std::int64_t n);

TermStore terms_by_summation(const SequenceDef& def, std::int64_t lo, std::int64_t hi);

/// The definition's initial terms as a store starting at def.offset.
TermStore seed_store(const SequenceDef& def);

/// Solves the recurrence for its top shift, one index at a time, until `upto`.
TermStore extend_by_recurrence(const SequenceDef& def, const TermStore& store, std::int64_t upto);

enum class Method { summation, recurrence, both };

/// Terms on [def.offset, upto]. Method::both generates along both paths and
/// throws SequenceError at the first index where they disagree.
TermStore build_terms(const SequenceDef& def, std::int64_t upto, Method method);

/// Evaluates sum_j c_j(n) z_{n+j} for each n in [lo, hi]; refuted at the
/// first nonzero residual, which is reported as the witness.
CertificateReport verify_recurrence(const SequenceDef& def, const TermStore& store, std::int64_t lo,
                                    std::int64_t hi);

/// r_n = z_{n+1} / z_n for n in [lo, hi]. Throws std::domain_error on a zero term.
std::vector<BigRational> ratios(const TermStore& store, std::int64_t lo, std::int64_t hi);

}  // namespace logcert
