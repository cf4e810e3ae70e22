#include "logcert/sequence/definition.hpp"

#include <sstream>

namespace logcert {

std::string_view to_string(BinomialKind kind) {
  switch (kind) {
    case BinomialKind::n_choose_k: return "binom(n,k)";
    case BinomialKind::n_plus_k_choose_k: return "binom(n+k,k)";
    case BinomialKind::central: return "binom(2k,k)";
  }
  return "?";
}

std::optional<BinomialKind> parse_binomial_kind(std::string_view text) {
  for (auto kind : {BinomialKind::n_choose_k, BinomialKind::n_plus_k_choose_k, BinomialKind::central}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

BigInt IntPolynomial::at(const BigInt& n) const {
  BigInt acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

bool IntPolynomial::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void SequenceDef::validate() const {
  if (name.empty()) throw DefinitionError("sequence name is empty");
  if (!summand && !recurrence) {
    throw DefinitionError(name + ": needs a binomial summand, a recurrence, or both");
  }
  if (summand) {
    for (const auto& f : summand->factors) {
      if (f.exponent == 0) throw DefinitionError(name + ": binomial factor exponent must be positive");
    }
    if (summand->denominator && summand->denominator->slope.is_zero() &&
        summand->denominator->intercept.is_zero()) {
      throw DefinitionError(name + ": summand denominator is identically zero");
    }
  }
  if (recurrence) {
    if (recurrence->coeffs.size() < 2) {
      throw DefinitionError(name + ": recurrence needs at least two coefficient polynomials");
    }
    if (recurrence->coeffs.back().is_zero()) {
      throw DefinitionError(name + ": leading recurrence coefficient is the zero polynomial");
    }
    if (initial_terms.size() < recurrence->order()) {
      throw DefinitionError(name + ": recurrence of order " + std::to_string(recurrence->order()) +
                            " needs at least " + std::to_string(recurrence->order()) +
                            " initial terms, got " + std::to_string(initial_terms.size()));
    }
  }
  if (summand && offset < 0) throw DefinitionError(name + ": summation is defined for n >= 0 only");
}

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
  IntPolynomial p;
  for (long v : c) p.coeffs.emplace_back(v);
  return p;
}

}  // namespace

SequenceDef builtin_R() {
  SequenceDef def;
  def.name = "R";
  def.summand = BinomialSummand{
      {{BinomialKind::n_choose_k, 1}, {BinomialKind::n_plus_k_choose_k, 1}},
      std::nullopt,
      LinearForm{BigInt(2), BigInt(-1)}};
  // (n+3) R_{n+3} - (7n+13) R_{n+2} + (7n+15) R_{n+1} - (n+1) R_n = 0
  def.recurrence = Recurrence{{poly({-1, -1}), poly({15, 7}), poly({-13, -7}), poly({3, 1})}};
  def.initial_terms = {BigInt(-1), BigInt(1), BigInt(7)};
  return def;
}

SequenceDef builtin_S() {
  SequenceDef def;
  def.name = "S";
  def.summand = BinomialSummand{
      {{BinomialKind::n_choose_k, 2}, {BinomialKind::central, 1}},
      LinearForm{BigInt(2), BigInt(1)},
      std::nullopt};
  // 9(n+1)^2 S_n - (19n^2+74n+87) S_{n+1} + (n+3)(11n+29) S_{n+2} - (n+3)^2 S_{n+3} = 0
  def.recurrence = Recurrence{{poly({9, 18, 9}), poly({-87, -74, -19}), poly({87, 62, 11}),
                               poly({-9, -6, -1})}};
  def.initial_terms = {BigInt(1), BigInt(7), BigInt(55)};
  return def;
}

std::string canonical_text(const SequenceDef& def) {
  std::ostringstream out;
  out << "name=" << def.name << ";offset=" << def.offset << ";";
  if (def.summand) {
    out << "summand=";
    for (const auto& f : def.summand->factors) out << to_string(f.kind) << "^" << f.exponent << ",";
    if (def.summand->numerator) {
      out << "num(" << def.summand->numerator->slope << "," << def.summand->numerator->intercept << ")";
    }
    if (def.summand->denominator) {
      out << "den(" << def.summand->denominator->slope << "," << def.summand->denominator->intercept
          << ")";
    }
    out << ";";
  }
  if (def.recurrence) {
    out << "recurrence=";
    for (const auto& p : def.recurrence->coeffs) {
      out << "[";
      for (const auto& c : p.coeffs) out << c << ",";
      out << "]";
    }
    out << ";";
  }
  out << "seeds=";
  for (const auto& t : def.initial_terms) out << t << ",";
  return out.str();
}

std::uint64_t content_hash(const SequenceDef& def) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text(def)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace logcert
