// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run all twelve
//   acceptance 3 7        run the listed ones
//
// Exit status is the number of criteria whose outcome differs from the
// expected one. Two criteria are known to be unattainable as written (see
// kKnownRed); they print FAIL, and count as expected only when exactly the
// documented sub-check fails and everything else in them passes.

#include "../support/properties.hpp"
#include "logcert/analysis/log_shape.hpp"
#include "logcert/analysis/root_checks.hpp"
#include "logcert/cli/dispatch.hpp"
#include "logcert/cli/render.hpp"
#include "logcert/exact/decimal.hpp"
#include "logcert/proof/inductive_step.hpp"
#include "logcert/proof/interlacing.hpp"
#include "logcert/proof/theorem.hpp"
#include "logcert/proof/xia.hpp"
#include "logcert/sequence/generate.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace logcert;

namespace {

// Tolerances and limits.
constexpr double kTable1Seconds = 1.0;
constexpr double kRecurrenceSeconds = 5.0;
constexpr double kXiaSeconds = 5.0;
const BigRational kTrendTolerance = parse_decimal("1e-6");
const BigRational kLimitTolerance = parse_decimal("0.05");
constexpr int kPropertyCases = 1000;

class Criterion {
 public:
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    if (!ok) failed_.insert(name);
    notes_.push_back((ok ? "" : "[x] ") + name + (detail.empty() ? "" : " " + detail));
  }
  void note(const std::string& text) { notes_.push_back(text); }

  [[nodiscard]] const std::set<std::string>& failed() const { return failed_; }
  [[nodiscard]] std::string summary() const {
    std::string out;
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  std::set<std::string> failed_;
  std::vector<std::string> notes_;
};

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string secs(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << "s";
  return o.str();
}

BigRational ulp(std::string_view printed) {
  auto dot = printed.find('.');
  std::size_t places = dot == std::string_view::npos ? 0 : printed.size() - dot - 1;
  return BigRational(BigInt(1), pow(BigInt(10), places));
}

bool within(const BigRational& a, const BigRational& b, const BigRational& tol) { return (a - b).abs() <= tol; }

bool status_is(const CertificateReport& r, std::string_view id, CertificateStatus s) {
  const CertificateStep* step = r.find(id);
  return step != nullptr && step->status == s;
}

const TermStore& R() {
  static const TermStore store = build_terms(builtin_R(), 1002, Method::recurrence);
  return store;
}

// 1. Table of b(n+1), r_n, b(n) for n = 3..9 through the CLI.
void table1(Criterion& c) {
  const std::vector<std::vector<std::string>> printed = {
      {"3.64277", "4.0799", "4.37132", "4.57948", "4.7356", "4.85702", "4.95416"},
      {"3.48", "3.78161", "4.1307", "4.41575", "4.62573", "4.78004", "4.89728"},
      {"2.91421", "3.64277", "4.0799", "4.37132", "4.57948", "4.7356", "4.85702"},
  };
  Stopwatch watch;
  std::ostringstream out;
  std::ostringstream err;
  int code = cli_dispatch({"--format", "csv", "table1", "--digits", "5"}, out, err);
  double took = watch.seconds();
  c.check("cli exit 0", code == kExitOk);

  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);  // header
  int matched = 0;
  for (std::size_t col = 0; col < 7 && std::getline(lines, line); ++col) {
    std::vector<std::string> cells;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    if (cells.size() != 4) break;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string& p = printed[k][col];
      if (within(parse_decimal(cells[k + 1]), parse_decimal(p), ulp(p))) {
        ++matched;
      } else {
        c.check("n=" + cells[0] + " value " + cells[k + 1] + " vs " + p, false);
      }
    }
  }
  c.check("values", matched == 21, std::to_string(matched) + "/21 within 1 ulp");
  c.check("runtime", took < kTable1Seconds, secs(took) + " < " + secs(kTable1Seconds));
}

// 2. Exact witnesses.
void exact_witnesses(Criterion& c) {
  const TermStore& z = R();
  const BigRational r3(z[4], z[3]);
  const BigRational r11(z[12], z[11]);
  c.check("R_1 = 1", z[1] == BigInt(1));
  c.check("r_3 = 87/25", r3 == BigRational(BigInt(87), BigInt(25)));
  c.check("r_11 = 16421831/3242377", r11 == BigRational(BigInt(16421831), BigInt(3242377)));
  c.check("5^2 = R_3", BigInt(25) == z[3]);
  c.check("r_11 > 5", r11 > BigRational(5), "margin " + (r11 - BigRational(5)).to_string());
}

// 3. Recurrence residuals against direct summation.
void recurrence(Criterion& c) {
  Stopwatch watch;
  for (const SequenceDef& def : {builtin_R(), builtin_S()}) {
    TermStore sum = terms_by_summation(def, 0, 203);
    CertificateReport rep = verify_recurrence(def, sum, 0, 200);
    c.check(def.name + " residuals zero on 0..200", rep.certified());
  }
  double took = watch.seconds();
  c.check("runtime", took < kRecurrenceSeconds, secs(took) + " < " + secs(kRecurrenceSeconds));
}

// 4. Strict log-convexity of R with the boundary case.
void log_convexity(Criterion& c) {
  CheckResult body = check_log_shape(R(), {4, 200}, Shape::convex);
  c.check("log-convex 4..200", body.verdict == Verdict::holds_strict, std::string(to_string(body.verdict)));
  CheckResult at3 = check_log_shape(R(), {3, 3}, Shape::convex);
  const BigInt gap = -std::get<BigInt>(at3.witness->difference());
  c.check("n=3 boundary 25^2 - 7*87", at3.verdict == Verdict::fails && gap == BigInt(16), "= " + gap.to_string());
  CertificateReport thm = assemble_theorem_report(R().slice(0, 202));
  const CertificateStep* b = thm.find("ratio.boundary_n3");
  c.check("recorded in the theorem ledger", b != nullptr && b->witness && std::get<BigInt>(*b->witness) == BigInt(16));
}

// 5. Ratio-bound lemma.
void lemma(Criterion& c) {
  CertificateReport inter = check_interlacing(R(), reference_bound(), 3, 500);
  c.check("interlacing 3..500", inter.certified());
  InductiveStepCertificate step = verify_inductive_step(reference_bound());
  c.check("identity (a)", status_is(step.report, "inductive.identity_a", CertificateStatus::certified));
  c.check("identity (b)", status_is(step.report, "inductive.identity_b", CertificateStatus::certified));
  c.check("f(3) = -3(4647+3328sqrt2)", step.a_at_3 == QuadNumber(BigRational(-3 * 4647), BigRational(-3 * 3328)));
  c.check("g(4) = 9(209+138sqrt2)", step.b_at_4 == QuadNumber(BigRational(9 * 209), BigRational(9 * 138)));
  c.check("sign certificates", step.sign_a.certified() && step.sign_b.certified());
  const std::string va = to_general(*step.vertex_a, 6);
  const std::string vb = to_general(*step.vertex_b, 6);
  c.check("vertex of f ~ 1.09549", va == "1.09549", "got " + va);
  // The quoted expression for the second vertex divides by the constant
  // term's coefficients; its value is shown next to the true vertex.
  const QuadNumber quoted = -QuadNumber(BigRational(1557), BigRational(1110)) /
                            (QuadNumber(2) * QuadNumber(BigRational(915), BigRational(654)));
  c.check("vertex of g ~ -0.849716", vb == "-0.849716",
          "got " + vb + " = -b/(2a); the quoted expression evaluates to " + to_general(quoted, 6));
}

// 6. Xia's criterion.
void xia(Criterion& c) {
  Stopwatch watch;
  XiaCertificate ok = check_xia(R(), reference_xia_parameters(), 200);
  c.check("(i) to 200", status_is(ok.report, "xia.i", CertificateStatus::certified));
  c.check("(ii) reduction", status_is(ok.report, "xia.ii.reduction", CertificateStatus::certified));
  c.check("(ii) signs", status_is(ok.report, "xia.ii.numerator", CertificateStatus::certified) &&
                            status_is(ok.report, "xia.ii.denominator", CertificateStatus::certified));
  c.check("(iii) N0=9", status_is(ok.report, "xia.iii", CertificateStatus::certified),
          to_general(ok.condition_iii, 6));
  XiaParameters p8 = reference_xia_parameters();
  p8.N0 = 8;
  XiaCertificate bad = check_xia(R(), p8, 200);
  c.check("(iii) refuted at N0=8", status_is(bad.report, "xia.iii", CertificateStatus::refuted),
          to_general(bad.condition_iii, 5));
  c.check("decimals", to_general(bad.condition_iii, 5) == "-1.5798e8" && to_general(ok.condition_iii, 6) == "6.41905e9");
  double took = watch.seconds();
  c.check("runtime", took < kXiaSeconds, secs(took) + " < " + secs(kXiaSeconds));
}

// 7. Root log-concavity, small range, and the four printed differences.
void root_log_concave(Criterion& c) {
  CheckResult r = check_root_log_concave(R(), {5, 60});
  c.check("5..60", r.verdict == Verdict::holds_strict, std::string(to_string(r.verdict)));
  const char* printed[] = {"0.00293164", "0.00445875", "0.00452784", "0.00404051"};
  RootRatioTrend t = root_ratio_trend(R(), {5, 9}, 8);
  for (int i = 0; i < 4; ++i) {
    c.check("n=" + std::to_string(5 + i),
            within(parse_decimal(t.rows[static_cast<std::size_t>(i)].difference), parse_decimal(printed[i]),
                   kTrendTolerance),
            t.rows[static_cast<std::size_t>(i)].difference);
  }
}

// 8. Root monotonicity with exact small differences.
void root_monotone(Criterion& c) {
  CheckResult r = check_root_monotone(R(), {1, 100}, Direction::increasing, {.record_through = 4});
  c.check("1..100", r.verdict == Verdict::holds_strict);
  const long want[] = {-6, -282, -267878, -6731904874L};
  bool all = r.recorded.size() == 4;
  std::string got;
  for (std::size_t i = 0; all && i < 4; ++i) {
    BigInt d = std::get<BigInt>(r.recorded[i].difference());
    all = all && d == BigInt(want[i]);
    got += (i ? ", " : "") + d.to_string();
  }
  c.check("differences", all, got);
}

// 9. Limits as finite properties.
void limits(Criterion& c) {
  EnclosureResult width = limit_enclosure(R(), reference_bound(), {3, 1000}, EnclosureRadius::interval_width);
  std::string where = width.check.first_violation ? " first violated at n=" + std::to_string(*width.check.first_violation) : "";
  c.check("|r_n - L| <= (9/2+3sqrt2)/(n(n+1)) on 3..1000", width.check.holds(),
          std::string(to_string(width.check.verdict)) + where);
  EnclosureResult gap = limit_enclosure(R(), reference_bound(), {3, 1000}, EnclosureRadius::tail_gap);
  c.note("reference: radius (9/2+3sqrt2)/n " + std::string(to_string(gap.check.verdict)) + ", |r_1000 - L| = " +
         to_general(gap.distance_at_hi));
  RootRatioTrend t = root_ratio_trend(R(), {5, 100}, 8);
  c.check("root-ratio trend 5..100", t.decreasing.verdict == Verdict::holds_strict);
  c.check("within 0.05 of 1 at n=100", t.distance_to_one_exact_bound < kLimitTolerance, t.distance_to_one);
}

// 10. S at desk scale.
void sequence_s(Criterion& c) {
  TermStore s = build_terms(builtin_S(), 202, Method::recurrence);
  c.check("ratios increasing 3..200",
          check_ratio_monotone(s, {3, 200}, Direction::increasing).verdict == Verdict::holds_strict);
  const BigRational r200(s[201], s[200]);
  c.check("r_200 within 0.05 of 9", within(r200, BigRational(9), kLimitTolerance), to_fixed(r200, 6));
  c.check("root log-concave 1..40", check_root_log_concave(s, {1, 40}).verdict == Verdict::holds_strict);
}

// 11. Conjecture evidence. {r_n}_{n>=4} log-concave means the inequality at
// every interior index, n = 5..200 here; n = 4 would need r_3.
void conjectures(Criterion& c) {
  ConjectureEvidence ev = conjecture_evidence(R().slice(0, 210), {});
  const CertificateStep* ratio = ev.report.find("conjecture.ratio_log_concave");
  c.check("r_4..r_201 log-concave", ratio != nullptr && ratio->status == CertificateStatus::evidence_only,
          ratio ? ratio->scope : "");
  const CertificateStep* edge = ev.report.find("conjecture.ratio_log_concave_boundary");
  if (edge != nullptr && edge->witness) c.note("inequality at n=4 (uses r_3): " + witness_exact(*edge->witness));
  c.check("report stays evidence-only", ev.report.status == CertificateStatus::evidence_only);
  bool ledgers = ev.ledgers.size() == 2;
  for (const auto& l : ev.ledgers) {
    ledgers = ledgers && l.depths.size() == 6 && l.depths.front().range.lo == 6 && l.depths.front().range.hi == 106;
    std::string signs;
    for (const auto& d : l.depths) signs += (signs.empty() ? "" : "/") + std::to_string(d.negatives);
    c.note(l.convention + " negatives by depth " + signs);
  }
  c.check("depth 0..5 ledgers, raw and abs", ledgers);
}

// 12. Randomized property suites.
void properties(Criterion& c) {
  auto run = [&](const std::string& name, int failures) {
    c.check(name, failures == 0, std::to_string(kPropertyCases - failures) + "/" + std::to_string(kPropertyCases));
  };
  run("field axioms", testing::field_axiom_failures(kPropertyCases, 1));
  run("quad_sign vs 50 digits", testing::quad_sign_failures(kPropertyCases, 2));
  run("int_nth_root", testing::nth_root_failures(kPropertyCases, 3));
  run("b-file round trip", testing::bfile_roundtrip_failures(kPropertyCases, 4));
}

struct Entry {
  const char* title;
  std::function<void(Criterion&)> run;
};

const std::map<int, Entry>& criteria() {
  static const std::map<int, Entry> all = {
      {1, {"table reproduction", table1}},
      {2, {"exact term witnesses", exact_witnesses}},
      {3, {"recurrence consistency", recurrence}},
      {4, {"log-convexity of R", log_convexity}},
      {5, {"ratio-bound lemma certificate", lemma}},
      {6, {"Xia certificate", xia}},
      {7, {"root log-concavity, small range", root_log_concave}},
      {8, {"root monotonicity", root_monotone}},
      {9, {"limits as finite properties", limits}},
      {10, {"S at desk scale", sequence_s}},
      {11, {"conjecture evidence", conjectures}},
      {12, {"property suites", properties}},
  };
  return all;
}

// Sub-checks that fail because the stated target is wrong, not the code.
const std::map<int, std::set<std::string>> kKnownRed = {
    {5, {"vertex of g ~ -0.849716"}},
    {9, {"|r_n - L| <= (9/2+3sqrt2)/(n(n+1)) on 3..1000"}},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::stoi(argv[i]));
  if (which.empty()) {
    for (const auto& [id, _] : criteria()) which.push_back(id);
  }

  int unexpected = 0;
  for (int id : which) {
    auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::cout << "FAIL " << id << " unknown criterion\n";
      ++unexpected;
      continue;
    }
    Criterion c;
    try {
      it->second.run(c);
    } catch (const std::exception& e) {
      c.check("exception", false, e.what());
    }
    const bool pass = c.failed().empty();
    auto known = kKnownRed.find(id);
    const std::set<std::string> expected = known == kKnownRed.end() ? std::set<std::string>{} : known->second;
    const bool as_expected = c.failed() == expected;
    if (!as_expected) ++unexpected;
    std::cout << (pass ? "PASS " : "FAIL ") << id << " " << it->second.title << ": " << c.summary();
    if (!pass && as_expected) std::cout << " (known unattainable, see README)";
    std::cout << "\n";
  }
  return unexpected;
}
