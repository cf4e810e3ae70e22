#include "logcert/proof/theorem.hpp"

#include "logcert/analysis/log_shape.hpp"
#include "logcert/analysis/root_checks.hpp"
#include "logcert/proof/inductive_step.hpp"
#include "logcert/exact/roots.hpp"
#include "logcert/proof/interlacing.hpp"
#include "logcert/sequence/generate.hpp"

#include <stdexcept>

namespace logcert {

namespace {

std::string range_text(std::int64_t lo, std::int64_t hi) {
  return IndexRange{lo, hi}.to_string();
}

CertificateStep summary_step(const CertificateReport& sub, std::string id, std::string description, std::string scope,
                             std::string anchor) {
  CertificateStep step{.id = std::move(id),
                       .description = std::move(description),
                       .status = sub.status,
                       .scope = std::move(scope),
                       .anchor = std::move(anchor)};
  const CertificateStep* bad = sub.first_refuted();
  const CertificateStep* last = sub.steps.empty() ? nullptr : &sub.steps.back();
  if (const CertificateStep* pick = bad != nullptr ? bad : last) {
    step.witness = pick->witness;
    step.index = pick->index;
  }
  return step;
}

bool direct_sum_matches(const SequenceDef& def, const TermStore& store, std::int64_t hi, CertificateReport& report) {
  if (!def.summand) return true;
  for (std::int64_t n = std::max(def.offset, store.first_index()); n <= hi; ++n) {
    BigInt direct = eval_binomial_sum(def, n);
    if (direct != store[n]) {
      report.add({.id = "terms.direct_sum",
                  .description = "stored term differs from the binomial sum",
                  .status = CertificateStatus::refuted,
                  .scope = range_text(def.offset, hi),
                  .anchor = "binomial-sum definition",
                  .witness = store[n] - direct,
                  .index = n});
      return false;
    }
  }
  report.add({.id = "terms.direct_sum",
              .description = "every stored term equals its binomial sum",
              .scope = range_text(def.offset, hi),
              .anchor = "binomial-sum definition",
              .witness = BigInt(0)});
  return true;
}

}  // namespace

CertificateReport assemble_theorem_report(const TermStore& store, const TheoremOptions& o) {
  if (o.horizon < kMinTheoremHorizon) {
    throw std::invalid_argument("theorem: horizon must be at least " + std::to_string(kMinTheoremHorizon) +
                                " (the ratio witness uses z_12), got " + std::to_string(o.horizon));
  }
  const std::int64_t H = o.horizon;
  store.require(0, H + 2, "theorem ledger");
  CertificateReport report{"ratio monotonicity, ratio limit, root monotonicity and root log-concavity of " +
                           store.name() + " (checked to horizon " + std::to_string(H) + ")"};

  // Terms first: nothing below means anything if these are wrong.
  const std::int64_t order = o.definition.recurrence ? static_cast<std::int64_t>(o.definition.recurrence->order()) : 0;
  CertificateReport rec = verify_recurrence(o.definition, store, 0, H + 2 - order);
  report.absorb(rec, "terms");
  if (!rec.certified()) return report;
  if (!direct_sum_matches(o.definition, store, H + 2, report)) return report;

  const BoundFunction b = reference_bound();
  const bool forms_agree = b == reference_bound_fraction_form();
  report.add({.id = "bound.forms",
              .description = "both written forms of b_n have the same coefficients: c0 = " + to_string(b.c0) +
                             ", c1 = " + to_string(b.c1),
              .status = forms_agree ? CertificateStatus::certified : CertificateStatus::refuted,
              .scope = "identity",
              .anchor = "ratio-bound lemma: bound sequence",
              .witness = reference_bound_fraction_form().c1 - b.c1});

  CertificateReport base = check_interlacing(store, b, o.base_from, o.base_to);
  report.add(summary_step(base, "lemma.base", "b_n < r_n < b_(n+1) on the base range",
                          range_text(o.base_from, o.base_to), "ratio-bound lemma: base range"));

  InductiveStepCertificate step = verify_inductive_step(b);
  report.absorb(step.report, "lemma");

  CertificateReport wide = check_interlacing(store, b, o.base_from, H);
  report.add(summary_step(wide, "lemma.direct", "b_n < r_n < b_(n+1) checked directly up to the horizon",
                          range_text(o.base_from, H), "ratio-bound lemma: direct check"));

  const bool bound_increasing = quad_sign(b.c1) < 0;
  report.add({.id = "ratio.bound_increasing",
              .description = "b_n is strictly increasing because c1 < 0, so interlacing forces r_n < r_(n+1)",
              .status = bound_increasing ? CertificateStatus::certified : CertificateStatus::refuted,
              .scope = "all n >= 1",
              .anchor = "ratio monotonicity",
              .witness = b.c1});

  // n = 3 is the boundary: log-concave there, with 25^2 - 7*87 = 16.
  CheckResult at3 = check_log_shape(store, {3, 3}, Shape::concave);
  CertificateStep boundary = to_step(at3, "ratio.boundary_n3", "ratio monotonicity: boundary case");
  boundary.description = "log-concave at n=3: z_3^2 - z_2 z_4 = 25^2 - 7*87 = 16 > 0";
  boundary.witness = store[3] * store[3] - store[2] * store[4];
  boundary.index = 3;
  report.add(boundary);
  CheckResult convex = check_log_shape(store, {4, H}, Shape::convex);
  report.add(to_step(convex, "ratio.log_convex", "ratio monotonicity: strict log-convexity"));
  CheckResult increasing = check_ratio_monotone(store, {3, H}, Direction::increasing);
  report.add(to_step(increasing, "ratio.increasing", "ratio monotonicity"));

  EnclosureResult enc = limit_enclosure(store, b, {o.base_from, H}, EnclosureRadius::tail_gap);
  CertificateStep enc_step = to_step(enc.check, "limit.enclosure", "ratio limit");
  enc_step.description = "|r_n - (3+2√2)| <= (3+2√2) - b_n = (9/2+3√2)/n, which tends to 0";
  if (enc.check.holds()) enc_step.witness = enc.radius_at_hi - enc.distance_at_hi;
  report.add(enc_step);

  CheckResult roots = check_root_monotone(store, {1, H}, Direction::increasing, {.record_through = 10});
  CertificateStep roots_step = to_step(roots, "roots.increasing", "root monotonicity");
  if (roots.holds() && !roots.recorded.empty()) {
    roots_step.witness = roots.recorded.front().difference();
    roots_step.index = roots.recorded.front().index;
  }
  report.add(roots_step);
  for (const Comparison& c : roots.recorded) {
    report.add({.id = "roots.small_n",
                .description = "z_n^(n+1) - z_(n+1)^n < 0",
                .status = quad_sign(to_quad(c.difference())) < 0 ? CertificateStatus::certified
                                                                 : CertificateStatus::refuted,
                .scope = "n = " + std::to_string(c.index),
                .anchor = "root monotonicity: small n",
                .witness = c.difference(),
                .index = c.index});
  }
  const BigRational r11(store[12], store[11]);
  const BigInt root_z3 = isqrt(store[3]);
  const bool z3_square = root_z3 * root_z3 == store[3];
  report.add({.id = "roots.ratio_witness",
              .description = "r_11 = " + r11.to_string() + " > " + root_z3.to_string() + " = sqrt(z_3)",
              .status = z3_square && r11 > BigRational(root_z3) ? CertificateStatus::certified
                                                                : CertificateStatus::refuted,
              .scope = "n = 11",
              .anchor = "root monotonicity: large n",
              .witness = r11 - BigRational(root_z3),
              .index = 11});

  RootRatioTrend trend = root_ratio_trend(store, {5, std::min(o.trend_to, H)}, o.trend_digits);
  CertificateStep trend_step = to_step(trend.decreasing, "roots.ratio_trend", "root ratio limit");
  trend_step.status = trend.decreasing.holds() ? CertificateStatus::evidence_only : CertificateStatus::refuted;
  trend_step.description = "root ratios decrease towards 1 (printed to " + std::to_string(o.trend_digits) +
                           " decimals; distance to 1 at the last row " + trend.distance_to_one + ")";
  trend_step.witness = trend.distance_to_one_exact_bound;
  report.add(trend_step);

  XiaParameters params{.f = shifted(b, -1), .k0 = o.k0, .N0 = o.N0};
  XiaCertificate xia = check_xia(store, params, H);
  report.absorb(xia.report, "log_concave_roots");

  CheckResult small = check_root_log_concave(store, {5, std::max<std::int64_t>(5, o.N0 - 1)});
  CertificateStep small_step = to_step(small, "log_concave_roots.small_n", "root log-concavity: small n");
  small_step.description = "rho_n > rho_(n+1) with rho_n = z_(n+1)^(1/(n+1)) / z_n^(1/n), by exact powers";
  report.add(small_step);
  return report;
}

ConjectureEvidence conjecture_evidence(const TermStore& store, const ConjectureOptions& o) {
  ConjectureEvidence out;
  out.report.claim = "bounded evidence for ratio log-concavity and infinite log-concavity of " + store.name();

  // {r_n}_{n >= from} is log-concave: the inequality at n needs r_(n-1), so it
  // starts at from + 1. The inequality at `from` itself is the boundary entry.
  CheckResult ratio_lc = check_ratio_log_concave(store, {o.ratio_from + 1, o.ratio_to});
  CertificateStep s = to_step(ratio_lc, "conjecture.ratio_log_concave", "ratio log-concavity (open)");
  if (ratio_lc.holds()) s.status = CertificateStatus::evidence_only;
  if (ratio_lc.holds()) s.witness = BigInt(o.ratio_to - o.ratio_from);
  out.report.add(s);

  CheckResult before = check_ratio_log_concave(store, {o.ratio_from, o.ratio_from});
  CertificateStep b = to_step(before, "conjecture.ratio_log_concave_boundary", "ratio log-concavity (open)");
  b.status = CertificateStatus::evidence_only;
  b.description = "outside the conjectured range: " + std::string(to_string(before.verdict));
  if (before.witness) b.witness = before.witness->difference();
  out.report.add(b);

  TermStore base = l_operator(store);
  for (const char* convention : {"raw", "abs"}) {
    TermStore input = std::string(convention) == "abs" ? absolute_values(base) : base;
    ExplorerLedger ledger =
        explore_infinite_log_concavity(input, o.explorer_start, o.explorer_depth, o.explorer_window, convention);
    for (const DepthVerdict& d : ledger.depths) {
      out.report.add({.id = std::string("conjecture.infinite_log_concave.") + convention,
                      .description = "depth " + std::to_string(d.depth) + ": " + std::to_string(d.negatives) +
                                     " negative, " + std::to_string(d.zeros) + " zero terms (" + ledger.label + ")",
                      .status = CertificateStatus::evidence_only,
                      .scope = d.range.to_string(),
                      .anchor = "infinite log-concavity (open)",
                      .witness = BigInt(static_cast<std::int64_t>(d.negatives)),
                      .index = d.first_negative});
    }
    out.ledgers.push_back(std::move(ledger));
  }
  if (out.report.status == CertificateStatus::certified) out.report.status = CertificateStatus::evidence_only;
  return out;
}

}  // namespace logcert
