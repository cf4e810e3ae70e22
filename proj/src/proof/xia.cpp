#include "logcert/proof/xia.hpp"

#include "logcert/analysis/check_result.hpp"
#include "logcert/proof/inductive_step.hpp"
#include "logcert/proof/interlacing.hpp"
#include "logcert/proof/sign_beyond.hpp"

#include <stdexcept>

namespace logcert {

namespace {

constexpr const char* kAnchor = "root log-concavity criterion";

BigInt hypothesis_bound(std::int64_t N0) { return BigInt(N0) * BigInt(N0) + BigInt(N0) + BigInt(2); }

QuadPolynomial n_squared_plus_n_plus_2() {
  return QuadPolynomial({QuadNumber(2), QuadNumber(1), QuadNumber(1)});
}

CertificateStatus from_sign(const SignCertificate& c, int want) {
  if (!c.certified()) return CertificateStatus::inconclusive;
  return c.strict && c.sign == want ? CertificateStatus::certified : CertificateStatus::refuted;
}

}  // namespace

XiaParameters reference_xia_parameters() { return {.f = shifted(reference_bound(), -1), .k0 = BigRational(4), .N0 = 9}; }

QuadRationalFunction xia_delta(const BoundFunction& f, const BigRational& k0) {
  return bound_as_function(f, 1) / bound_as_function(f, 3) - QuadRationalFunction(QuadNumber(1)) +
         QuadRationalFunction(QuadPolynomial::constant(QuadNumber(k0)), n_squared_plus_n_plus_2());
}

QuadRationalFunction xia_delta_closed_form() {
  QuadPolynomial numer = QuadPolynomial::constant(QuadNumber(2)) * QuadPolynomial({QuadNumber(-3), QuadNumber(1)}) *
                         QuadPolynomial({QuadNumber(2), QuadNumber(1)});
  QuadPolynomial denom = QuadPolynomial::x() * QuadPolynomial({QuadNumber(1), QuadNumber(2)}) * n_squared_plus_n_plus_2();
  return {std::move(numer), std::move(denom)};
}

QuadNumber xia_condition_iii(const TermStore& store, const BoundFunction& f, const BigRational& k0, std::int64_t N0) {
  const BigInt m = hypothesis_bound(N0);
  const BigRational base = BigRational(1) - k0 / BigRational(m);
  QuadNumber lhs = QuadNumber(pow(base, m.to_int64())) * pow(eval_bound(f, N0), static_cast<std::uint64_t>(2 * N0));
  return lhs - QuadNumber(store[N0] * store[N0]);
}

XiaCertificate check_xia(const TermStore& store, const XiaParameters& params, std::int64_t horizon) {
  const std::int64_t N0 = params.N0;
  if (N0 < 2) throw std::invalid_argument("criterion: N0 must be at least 2");
  if (params.k0.sign() <= 0) throw std::invalid_argument("criterion: k0 must be positive");
  IndexRange{N0, horizon}.validate("criterion horizon");
  store.require(N0 - 1, horizon, "root log-concavity criterion");

  XiaCertificate out;
  CertificateReport& report = out.report;
  report.claim = "root sequence of " + store.name() + " strictly log-concave from n=" + std::to_string(N0) +
                 " (k0=" + params.k0.to_string() + ")";

  const BigInt m = hypothesis_bound(N0);
  const BigRational slack = BigRational(m) - params.k0;
  report.add({.id = "xia.hypothesis",
              .description = "k0 < N0^2 + N0 + 2 = " + m.to_string(),
              .status = slack.sign() > 0 ? CertificateStatus::certified : CertificateStatus::refuted,
              .scope = "N0 = " + std::to_string(N0),
              .anchor = kAnchor,
              .witness = slack});

  // (i): f(n) < z_n/z_{n-1} < f(n+1) is interlacing of g(m) = f(m+1) at m = n-1.
  const BoundFunction g = shifted(params.f, 1);
  CertificateReport inter = check_interlacing(store, g, N0 - 1, horizon - 1);
  QuadNumber f_start = eval_bound(params.f, N0);
  const bool f_positive = quad_sign(f_start) > 0;
  const CertificateStep* bad = inter.first_refuted();
  CertificateStep step_i{.id = "xia.i",
                         .description = "0 < f(n) < z_n/z_(n-1) < f(n+1); certified only up to the horizon, the "
                                        "unbounded range rests on the inductive ratio-bound certificate",
                         .scope = "n in [" + std::to_string(N0) + ", " + std::to_string(horizon) + "] (finite horizon)",
                         .anchor = kAnchor,
                         .witness = f_start};
  if (!f_positive) {
    step_i.status = CertificateStatus::refuted;
    step_i.description = "f(N0) is not positive";
    step_i.index = N0;
  } else if (bad != nullptr) {
    step_i.status = CertificateStatus::refuted;
    step_i.description = "ratio bound fails: " + bad->description;
    step_i.witness = bad->witness;
    step_i.index = bad->index ? std::optional(*bad->index + 1) : std::nullopt;
  }
  report.add(step_i);

  // (ii): symbolic for every n >= N0.
  out.delta = xia_delta(params.f, params.k0);
  const XiaParameters ref = reference_xia_parameters();
  if (params.f == ref.f && params.k0 == ref.k0) {
    const bool same = out.delta == xia_delta_closed_form();
    report.add({.id = "xia.ii.reduction",
                .description = "f(n+1)/f(n+3) - 1 + k0/(n^2+n+2) reduces to 2(n-3)(n+2) / (n(2n+1)(n^2+n+2))",
                .status = same ? CertificateStatus::certified : CertificateStatus::refuted,
                .scope = "identity in n",
                .anchor = kAnchor,
                .witness = same ? QuadNumber(0) : (out.delta - xia_delta_closed_form()).numer().leading()});
  }
  const BigRational from(N0);
  SignCertificate num_sign = sign_beyond(out.delta.numer(), from, "numerator of Delta", "n");
  SignCertificate den_sign = sign_beyond(out.delta.denom(), from, "denominator of Delta", "n");
  report.add({.id = "xia.ii.numerator",
              .description = "numerator " + to_string(out.delta.numer()) + " is positive (" + num_sign.summary("n") +
                             ")",
              .status = from_sign(num_sign, 1),
              .scope = "all n >= " + std::to_string(N0),
              .anchor = kAnchor,
              .witness = num_sign.value_at_k0,
              .index = N0});
  report.add({.id = "xia.ii.denominator",
              .description = "denominator " + to_string(out.delta.denom()) + " is positive (" + den_sign.summary("n") +
                             ")",
              .status = from_sign(den_sign, 1),
              .scope = "all n >= " + std::to_string(N0),
              .anchor = kAnchor,
              .witness = den_sign.value_at_k0,
              .index = N0});

  // (iii)
  out.condition_iii = xia_condition_iii(store, params.f, params.k0, N0);
  report.add({.id = "xia.iii",
              .description = "(1 - k0/(N0^2+N0+2))^(N0^2+N0+2) f(N0)^(2 N0) - z_N0^2 > 0",
              .status = quad_sign(out.condition_iii) > 0 ? CertificateStatus::certified : CertificateStatus::refuted,
              .scope = "N0 = " + std::to_string(N0),
              .anchor = kAnchor,
              .witness = out.condition_iii,
              .index = N0});
  return out;
}

std::optional<std::int64_t> find_min_N0(const TermStore& store, const BoundFunction& f, const BigRational& k0,
                                        std::int64_t lo, std::int64_t hi) {
  IndexRange{lo, hi}.validate("N0 search");
  store.require(std::max<std::int64_t>(lo - 1, store.first_index()), hi, "N0 search");
  for (std::int64_t N0 = std::max<std::int64_t>(lo, 2); N0 <= hi; ++N0) {
    if (BigRational(hypothesis_bound(N0)) <= k0) continue;
    if (quad_sign(xia_condition_iii(store, f, k0, N0)) <= 0) continue;
    QuadNumber r(BigRational(store[N0], store[N0 - 1]));
    QuadNumber lower = eval_bound(f, N0);
    if (quad_sign(lower) > 0 && quad_sign(r - lower) > 0 && quad_sign(eval_bound(f, N0 + 1) - r) > 0) return N0;
  }
  return std::nullopt;
}

}  // namespace logcert
