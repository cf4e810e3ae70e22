#pragma once

// Criterion for strict log-concavity of the root sequence z_n^(1/n), n >= N0:
//   (i)   0 < f(n) < z_n/z_{n-1} < f(n+1) for n >= N0,
//   (ii)  f(n+1)/f(n+3) > 1 - k0/(n^2+n+2) for n >= N0,
//   (iii) (1 - k0/(N0^2+N0+2))^(N0^2+N0+2) * f(N0)^(2 N0) > z_{N0}^2,
// under the hypothesis k0 < N0^2 + N0 + 2.

#include "logcert/analysis/bound.hpp"
#include "logcert/exact/certificate.hpp"
#include "logcert/proof/rational_function.hpp"
#include "logcert/sequence/term_store.hpp"

#include <cstdint>
#include <optional>

namespace logcert {

struct XiaParameters {
  BoundFunction f;
  BigRational k0;
  std::int64_t N0 = 0;
};

/// f(n) = b(n-1) for the ratio bound of R, k0 = 4, N0 = 9.
XiaParameters reference_xia_parameters();

/// Delta(n) = f(n+1)/f(n+3) - 1 + k0/(n^2+n+2).
QuadRationalFunction xia_delta(const BoundFunction& f, const BigRational& k0);

/// 2(n-3)(n+2) / (n(2n+1)(n^2+n+2)), the reduced Delta for the R parameters.
QuadRationalFunction xia_delta_closed_form();

/// LHS - RHS of condition (iii) at N0.
QuadNumber xia_condition_iii(const TermStore& store, const BoundFunction& f, const BigRational& k0, std::int64_t N0);

struct XiaCertificate {
  CertificateReport report;
  QuadRationalFunction delta;
  QuadNumber condition_iii;  // LHS - RHS
};

/// Certifies the hypothesis, (i) on [N0, horizon] (finite horizon, said so in
/// the ledger), (ii) for all n >= N0 symbolically, and (iii). Store must
/// cover [N0-1, horizon].
XiaCertificate check_xia(const TermStore& store, const XiaParameters& params, std::int64_t horizon);

/// Smallest N0 in [lo, hi] for which the hypothesis, (iii), and (i) at N0 hold.
std::optional<std::int64_t> find_min_N0(const TermStore& store, const BoundFunction& f, const BigRational& k0,
                                        std::int64_t lo, std::int64_t hi);

}  // namespace logcert
