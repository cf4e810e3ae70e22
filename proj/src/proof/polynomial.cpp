#include "logcert/proof/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace logcert {

QuadPolynomial::QuadPolynomial(std::vector<QuadNumber> ascending) : c_(std::move(ascending)) { trim(); }

QuadPolynomial::QuadPolynomial(std::initializer_list<QuadNumber> ascending) : c_(ascending) { trim(); }

QuadPolynomial QuadPolynomial::constant(QuadNumber c) { return QuadPolynomial({std::move(c)}); }

QuadPolynomial QuadPolynomial::x() { return QuadPolynomial({QuadNumber(0), QuadNumber(1)}); }

QuadPolynomial QuadPolynomial::linear_root(const QuadNumber& root) { return QuadPolynomial({-root, QuadNumber(1)}); }

void QuadPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QuadNumber QuadPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QuadNumber(); }

QuadNumber QuadPolynomial::leading() const { return c_.empty() ? QuadNumber() : c_.back(); }

QuadNumber QuadPolynomial::eval(const QuadNumber& at) const {
  QuadNumber acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QuadPolynomial QuadPolynomial::taylor_shift(const QuadNumber& shift) const {
  std::vector<QuadNumber> a = c_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += shift * a[j];
  }
  return QuadPolynomial(std::move(a));
}

QuadPolynomial QuadPolynomial::derivative() const {
  std::vector<QuadNumber> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * QuadNumber(static_cast<std::int64_t>(i)));
  return QuadPolynomial(std::move(d));
}

QuadPolynomial QuadPolynomial::monic() const {
  if (c_.empty()) return {};
  const QuadNumber lead = c_.back();
  std::vector<QuadNumber> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c / lead);
  return QuadPolynomial(std::move(out));
}

QuadPolynomial QuadPolynomial::operator-() const {
  std::vector<QuadNumber> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(-c);
  return QuadPolynomial(std::move(out));
}

QuadPolynomial& QuadPolynomial::operator+=(const QuadPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QuadPolynomial& QuadPolynomial::operator-=(const QuadPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QuadPolynomial& QuadPolynomial::operator*=(const QuadPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<QuadNumber> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

PolyDivision divmod(const QuadPolynomial& a, const QuadPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<QuadNumber> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QuadPolynomial(), a};
  std::vector<QuadNumber> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const QuadNumber lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    QuadNumber q = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QuadPolynomial(std::move(quot)), QuadPolynomial(std::move(rem))};
}

QuadPolynomial gcd(QuadPolynomial a, QuadPolynomial b) {
  while (!b.is_zero()) {
    QuadPolynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string to_string(const QuadPolynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const QuadNumber& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const BigRational& lead_part = c.rational_part().is_zero() ? c.surd_part() : c.rational_part();
    const bool negative = lead_part.sign() < 0;
    std::string text = to_string(negative ? -c : c);
    const bool compound = text.find_first_of("+-", 1) != std::string::npos && text.back() != ')';
    if (i > 0 && text == "1") {
      text.clear();
    } else if (compound && (i > 0 || negative || !out.empty())) {
      text = "(" + text + ")";
    }
    if (i > 0) {
      text += var;
      if (i > 1) text += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = negative ? "-" + text : text;
    } else {
      out += negative ? " - " : " + ";
      out += text;
    }
  }
  return out;
}

}  // namespace logcert
