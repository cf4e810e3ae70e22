#include "logcert/proof/sign_beyond.hpp"

#include <stdexcept>

namespace logcert {

std::string_view to_string(SignMethod m) {
  switch (m) {
    case SignMethod::shift_test: return "shift test";
    case SignMethod::vertex: return "vertex argument";
    case SignMethod::none: return "none";
  }
  return "none";
}

std::string SignCertificate::summary(std::string_view var) const {
  if (!certified()) return "inconclusive";
  std::string word = sign > 0 ? "positive" : "negative";
  if (strict) return word;
  word = sign > 0 ? "nonnegative" : "nonpositive";
  if (zero_at) word += ", zero at " + std::string(var) + "=" + to_string(*zero_at);
  return word;
}

namespace {

const char* sign_word(int s) { return s > 0 ? "positive" : s < 0 ? "negative" : "zero"; }

// Every coefficient of q = p(x + k0) has sign s or is zero => p has sign s on
// [k0, inf); p(k0) = q(0) is then the only possible zero there.
bool shift_test(const QuadPolynomial& p, const BigRational& k0, std::string_view name, std::string_view var,
                SignCertificate& cert) {
  const QuadPolynomial q = p.taylor_shift(QuadNumber(k0));
  int s = quad_sign(q.leading());
  for (const auto& c : q.coeffs()) {
    int cs = quad_sign(c);
    if (cs != 0 && cs != s) {
      cert.report.add({.id = "sign.shift",
                       .description = "coefficients of " + std::string(name) + "(" + std::string(var) + "+" +
                                      k0.to_string() + ") change sign: " + to_string(q, var),
                       .status = CertificateStatus::evidence_only,
                       .anchor = "polynomial sign beyond a point: shift test",
                       .witness = c});
      return false;
    }
  }
  cert.status = CertificateStatus::certified;
  cert.method = SignMethod::shift_test;
  cert.sign = s;
  cert.strict = !q.coeff(0).is_zero();
  if (!cert.strict) cert.zero_at = QuadNumber(k0);
  cert.report.add({.id = "sign.shift",
                   .description = "every coefficient of " + std::string(name) + "(" + std::string(var) + "+" +
                                  k0.to_string() + ") = " + to_string(q, var) + " is " + sign_word(s) + " or zero",
                   .scope = std::string(var) + " >= " + k0.to_string(),
                   .anchor = "polynomial sign beyond a point: shift test",
                   .witness = q.leading()});
  return true;
}

bool vertex_argument(const QuadPolynomial& p, const BigRational& k0, std::string_view name, std::string_view var,
                     SignCertificate& cert) {
  if (p.degree() != 2) return false;
  const QuadNumber a = p.coeff(2);
  const QuadNumber v = cert.vertex.value();
  const int sa = quad_sign(a);
  const std::string scope = std::string(var) + " >= " + k0.to_string();
  const CertificateStep leading{.id = "sign.vertex.leading",
                                .description = "leading coefficient of " + std::string(name) + " is " + sign_word(sa),
                                .scope = scope,
                                .anchor = "polynomial sign beyond a point: vertex argument",
                                .witness = a};

  if (quad_sign(v - QuadNumber(k0)) <= 0) {
    // Monotone on [k0, inf) in the direction of a; p(k0) fixes the sign.
    const QuadNumber at = cert.value_at_k0;
    const int s0 = quad_sign(at);
    if (s0 != 0 && s0 != sa) return false;
    cert.report.add(leading);
    cert.report.add({.id = "sign.vertex.axis",
                     .description = "axis of symmetry " + std::string(var) + " = " + to_string(v) + " is <= " +
                                    k0.to_string(),
                     .scope = scope,
                     .anchor = "polynomial sign beyond a point: vertex argument",
                     .witness = QuadNumber(k0) - v});
    cert.report.add({.id = "sign.vertex.value",
                     .description = std::string(name) + "(" + k0.to_string() + ") is " + sign_word(s0),
                     .scope = scope,
                     .anchor = "polynomial sign beyond a point: vertex argument",
                     .witness = at});
    cert.sign = sa;
    cert.strict = s0 != 0;
    if (!cert.strict) cert.zero_at = QuadNumber(k0);
  } else {
    // Vertex inside the range: the extreme value p(v) decides.
    const QuadNumber extreme = p.eval(v);
    const int se = quad_sign(extreme);
    if (se != 0 && se != sa) return false;
    cert.report.add(leading);
    cert.report.add({.id = "sign.vertex.extreme",
                     .description = std::string(name) + " attains its " + (sa > 0 ? "minimum " : "maximum ") +
                                    to_string(extreme) + " at " + std::string(var) + " = " + to_string(v),
                     .scope = scope,
                     .anchor = "polynomial sign beyond a point: vertex argument",
                     .witness = extreme});
    cert.sign = sa;
    cert.strict = se != 0;
    if (!cert.strict) cert.zero_at = v;
  }
  cert.status = CertificateStatus::certified;
  cert.method = SignMethod::vertex;
  return true;
}

}  // namespace

SignCertificate sign_beyond(const QuadPolynomial& p, const BigRational& k0, std::string_view name,
                            std::string_view var) {
  if (p.is_zero()) throw std::invalid_argument("sign_beyond: zero polynomial has no sign");
  SignCertificate cert;
  cert.report.claim = std::string(name) + "(" + std::string(var) + ") = " + to_string(p, var) +
                      " keeps one sign for " + std::string(var) + " >= " + k0.to_string();
  cert.value_at_k0 = p.eval(QuadNumber(k0));
  if (p.degree() == 2) cert.vertex = -p.coeff(1) / (QuadNumber(2) * p.coeff(2));

  if (!shift_test(p, k0, name, var, cert) && !vertex_argument(p, k0, name, var, cert)) {
    cert.status = CertificateStatus::inconclusive;
    cert.report.add({.id = "sign.inconclusive",
                     .description = "neither the shift test nor the vertex argument applies; widen the start point",
                     .status = CertificateStatus::inconclusive,
                     .scope = std::string(var) + " >= " + k0.to_string(),
                     .anchor = "polynomial sign beyond a point",
                     .witness = cert.value_at_k0});
  }
  // Failed attempts are kept as evidence lines; the report status follows the certificate.
  cert.report.status = cert.status;
  return cert;
}

}  // namespace logcert
