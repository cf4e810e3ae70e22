#include "logcert/proof/inductive_step.hpp"

namespace logcert {

namespace {

QuadNumber surd(std::int64_t a, std::int64_t b) { return QuadNumber(BigRational(a), BigRational(b)); }

QuadPolynomial lin(std::int64_t slope, std::int64_t intercept) {
  return QuadPolynomial({QuadNumber(intercept), QuadNumber(slope)});
}

QuadRationalFunction poly(QuadPolynomial p) { return {std::move(p)}; }

constexpr const char* kAnchor = "ratio-bound lemma: inductive step";

void add_identity(CertificateReport& report, const char* id, const QuadRationalFunction& lhs,
                  const QuadRationalFunction& rhs, const std::string& what, const std::string& shown) {
  if (lhs == rhs) {
    report.add({.id = id,
                .description = what + " equals " + shown,
                .scope = "identity in k",
                .anchor = kAnchor,
                .witness = QuadNumber(0)});
    return;
  }
  QuadRationalFunction diff = lhs - rhs;
  report.add({.id = id,
              .description = what + " differs from the closed form by " + to_string(diff, "k"),
              .status = CertificateStatus::refuted,
              .scope = "identity in k",
              .anchor = kAnchor,
              .witness = diff.numer().leading()});
}

void add_sign(CertificateReport& report, const char* id, const SignCertificate& cert, int want,
              const std::string& what, std::int64_t from) {
  const bool ok = cert.certified() && cert.strict && cert.sign == want;
  CertificateStatus status = ok                 ? CertificateStatus::certified
                             : cert.certified() ? CertificateStatus::refuted
                                                : CertificateStatus::inconclusive;
  report.add({.id = id,
              .description = what + " is " + (want > 0 ? "positive" : "negative") + " (" + cert.summary("k") +
                             ", by " + std::string(to_string(cert.method)) + ")",
              .status = status,
              .scope = "all k >= " + std::to_string(from),
              .anchor = kAnchor,
              .witness = cert.value_at_k0,
              .index = from});
}

}  // namespace

QuadRationalFunction bound_as_function(const BoundFunction& b, std::int64_t j) {
  // (c0 (k + j + s) + c1) / (k + j + s)
  const std::int64_t offset = j + b.shift;
  QuadPolynomial arg({QuadNumber(offset), QuadNumber(1)});
  QuadPolynomial numer = QuadPolynomial::constant(b.c0) * arg + QuadPolynomial::constant(b.c1);
  return {std::move(numer), std::move(arg)};
}

QuadPolynomial inductive_quadratic_a() {
  return QuadPolynomial({QuadNumber(-3) * surd(1197, 844), QuadNumber(3) * surd(3146, 2220),
                         QuadNumber(-24) * surd(179, 127)});
}

QuadPolynomial inductive_quadratic_b() {
  return QuadPolynomial({-surd(915, 654), -surd(1557, 1110), surd(564, 396)});
}

InductiveStepCertificate verify_inductive_step(const BoundFunction& b) {
  InductiveStepCertificate out;
  out.report.claim = "b_k < r_k < b_{k+1} propagates from k to k+1 for all k >= 3";
  const auto b0 = bound_as_function(b, 0);
  const auto b1 = bound_as_function(b, 1);
  const auto b2 = bound_as_function(b, 2);
  const auto b3 = bound_as_function(b, 3);

  const QuadRationalFunction lhs_a = poly(lin(7, 13)) * b0 * b1 * b2 - poly(lin(7, 15)) * b0 * b1 +
                                     poly(lin(1, 1)) * b2 - poly(lin(1, 3)) * b0 * b1 * b2 * b3;
  const QuadPolynomial den_a = QuadPolynomial::constant(QuadNumber(16)) * lin(1, 0) * lin(1, 1) * lin(1, 2);
  out.quadratic_a = inductive_quadratic_a();
  add_identity(out.report, "inductive.identity_a", lhs_a, QuadRationalFunction(out.quadratic_a, den_a),
               "lower-bound expression (a)", "[" + to_string(out.quadratic_a, "k") + "] / (16k(k+1)(k+2))");

  const QuadRationalFunction lhs_b = poly(lin(7, 13)) * b1 * b2 - poly(lin(7, 15)) * b2 + poly(lin(1, 1)) -
                                     poly(lin(1, 3)) * b1 * b2 * b2;
  const QuadPolynomial den_b = QuadPolynomial::constant(QuadNumber(8)) * lin(1, 1) * lin(1, 2) * lin(1, 2);
  out.quadratic_b = inductive_quadratic_b();
  add_identity(out.report, "inductive.identity_b", lhs_b, QuadRationalFunction(out.quadratic_b, den_b),
               "upper-bound expression (b)", "[" + to_string(out.quadratic_b, "k") + "] / (8(k+1)(k+2)^2)");

  out.a_at_3 = out.quadratic_a.eval(QuadNumber(3));
  out.b_at_4 = out.quadratic_b.eval(QuadNumber(4));
  out.sign_a = sign_beyond(out.quadratic_a, BigRational(3), "f", "k");
  out.sign_b = sign_beyond(out.quadratic_b, BigRational(4), "g", "k");
  out.vertex_a = out.sign_a.vertex;
  out.vertex_b = out.sign_b.vertex;
  add_sign(out.report, "inductive.sign_a", out.sign_a, -1, "quadratic f(k) = " + to_string(out.quadratic_a, "k"), 3);
  add_sign(out.report, "inductive.sign_b", out.sign_b, 1, "quadratic g(k) = " + to_string(out.quadratic_b, "k"), 4);
  add_sign(out.report, "inductive.denominator_a", sign_beyond(den_a, BigRational(3), "16k(k+1)(k+2)", "k"), 1,
           "denominator 16k(k+1)(k+2)", 3);
  add_sign(out.report, "inductive.denominator_b", sign_beyond(den_b, BigRational(4), "8(k+1)(k+2)^2", "k"), 1,
           "denominator 8(k+1)(k+2)^2", 4);
  add_sign(out.report, "inductive.bound_positive", sign_beyond(b0.numer(), BigRational(3), "b_k numerator", "k"),
           quad_sign(b0.denom().leading()), "numerator of b_k = " + to_string(b0.numer(), "k"), 3);
  return out;
}

}  // namespace logcert
