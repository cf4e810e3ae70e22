#include "logcert/sequence/generate.hpp"

#include <string>

namespace logcert {

namespace {

std::string range_text(std::int64_t lo, std::int64_t hi) {
  return "n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// Running values of the three binomial kinds as k advances from 0 to n.
struct BinomialCursor {
  std::int64_t n;
  std::int64_t k = 0;
  BigInt n_choose_k{1};
  BigInt n_plus_k_choose_k{1};
  BigInt central{1};

  [[nodiscard]] const BigInt& value(BinomialKind kind) const {
    switch (kind) {
      case BinomialKind::n_choose_k: return n_choose_k;
      case BinomialKind::n_plus_k_choose_k: return n_plus_k_choose_k;
      case BinomialKind::central: return central;
    }
    return central;
  }

  void advance() {
    BigInt next(k + 1);
    n_choose_k = exact_div(n_choose_k * BigInt(n - k), next);
    n_plus_k_choose_k = exact_div(n_plus_k_choose_k * BigInt(n + k + 1), next);
    central = exact_div(central * BigInt(2 * (2 * k + 1)), next);
    ++k;
  }
};

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt acc(1);
  for (std::int64_t i = 1; i <= k; ++i) acc = exact_div(acc * BigInt(n - k + i), BigInt(i));
  return acc;
}

BigInt eval_binomial_sum(const SequenceDef& def, std::int64_t n) {
  if (!def.summand) throw DefinitionError(def.name + ": no binomial summand to evaluate");
  if (n < 0) throw DefinitionError(def.name + ": summation index must be non-negative");
  const BinomialSummand& s = *def.summand;

  BigRational sum;
  BinomialCursor cursor{n};
  for (std::int64_t k = 0; k <= n; ++k) {
    BigInt term(1);
    for (const auto& f : s.factors) term *= pow(cursor.value(f.kind), f.exponent);
    if (s.numerator) term *= s.numerator->at(k);
    if (s.denominator) {
      BigInt d = s.denominator->at(k);
      if (d.is_zero()) {
        throw DefinitionError(def.name + ": summand denominator vanishes at k=" + std::to_string(k));
      }
      sum += BigRational(term, d);
    } else {
      sum += BigRational(term);
    }
    if (k < n) cursor.advance();
  }
  if (!sum.is_integer()) {
    throw DefinitionError(def.name + ": sum at n=" + std::to_string(n) + " is not an integer (" +
                          sum.to_string() + ")");
  }
  return sum.num();
}

TermStore terms_by_summation(const SequenceDef& def, std::int64_t lo, std::int64_t hi) {
  std::vector<BigInt> terms;
  for (std::int64_t n = lo; n <= hi; ++n) terms.push_back(eval_binomial_sum(def, n));
  return TermStore(def.name, lo, std::move(terms));
}

TermStore seed_store(const SequenceDef& def) {
  return TermStore(def.name, def.offset, def.initial_terms);
}

TermStore extend_by_recurrence(const SequenceDef& def, const TermStore& store, std::int64_t upto) {
  if (!def.recurrence) throw DefinitionError(def.name + ": no recurrence to extend with");
  const Recurrence& rec = *def.recurrence;
  const auto order = static_cast<std::int64_t>(rec.order());
  if (static_cast<std::int64_t>(store.size()) < order) {
    throw SequenceError(def.name + ": recurrence of order " + std::to_string(order) + " needs " +
                        std::to_string(order) + " seed terms, store has " +
                        std::to_string(store.size()));
  }
  if (upto <= store.last_index()) return store.slice(store.first_index(), upto);

  std::vector<BigInt> terms(store.terms().begin(), store.terms().end());
  const std::int64_t first = store.first_index();
  for (std::int64_t target = store.last_index() + 1; target <= upto; ++target) {
    const std::int64_t n = target - order;
    const BigInt bn(n);
    BigInt lead = rec.coeffs.back().at(bn);
    if (lead.is_zero()) {
      throw SequenceError(def.name + ": leading coefficient vanishes at n=" + std::to_string(n));
    }
    BigInt rest;
    for (std::int64_t j = 0; j < order; ++j) {
      rest += rec.coeffs[static_cast<std::size_t>(j)].at(bn) * terms[static_cast<std::size_t>(n + j - first)];
    }
    BigInt numer = -rest;
    if (!divides(lead, numer)) {
      throw SequenceError(def.name + ": recurrence step n=" + std::to_string(n) +
                          " is not an exact division (" + numer.to_string() + " / " +
                          lead.to_string() + ")");
    }
    terms.push_back(exact_div(numer, lead));
  }
  return TermStore(store.name(), first, std::move(terms));
}

TermStore build_terms(const SequenceDef& def, std::int64_t upto, Method method) {
  def.validate();
  switch (method) {
    case Method::summation:
      return terms_by_summation(def, def.offset, upto);
    case Method::recurrence:
      return extend_by_recurrence(def, seed_store(def), upto);
    case Method::both: {
      TermStore by_sum = terms_by_summation(def, def.offset, upto);
      TermStore by_rec = extend_by_recurrence(def, seed_store(def), upto);
      for (std::int64_t n = def.offset; n <= upto; ++n) {
        if (by_sum[n] != by_rec[n]) {
          throw SequenceError(def.name + ": summation and recurrence disagree at n=" +
                              std::to_string(n) + " (sum " + by_sum[n].to_string() +
                              ", recurrence " + by_rec[n].to_string() + ")");
        }
      }
      return by_sum;
    }
  }
  throw SequenceError("unknown generation method");
}

CertificateReport verify_recurrence(const SequenceDef& def, const TermStore& store, std::int64_t lo,
                                    std::int64_t hi) {
  if (!def.recurrence) throw DefinitionError(def.name + ": no recurrence to verify");
  const Recurrence& rec = *def.recurrence;
  const auto order = static_cast<std::int64_t>(rec.order());
  store.require(lo, hi + order, "recurrence check");

  CertificateReport report{"recurrence of " + def.name + " holds on " + range_text(lo, hi)};
  for (std::int64_t n = lo; n <= hi; ++n) {
    const BigInt bn(n);
    BigInt residual;
    for (std::int64_t j = 0; j <= order; ++j) {
      residual += rec.coeffs[static_cast<std::size_t>(j)].at(bn) * store[n + j];
    }
    if (!residual.is_zero()) {
      report.add({.id = "recurrence.residual",
                  .description = "nonzero residual of the recurrence at n=" + std::to_string(n),
                  .status = CertificateStatus::refuted,
                  .scope = range_text(lo, hi),
                  .anchor = "four-term recurrence",
                  .witness = residual,
                  .index = n});
      return report;
    }
  }
  report.add({.id = "recurrence.residual",
              .description = "every residual of the recurrence is exactly zero",
              .scope = range_text(lo, hi),
              .anchor = "four-term recurrence",
              .witness = BigInt(0)});
  return report;
}

std::vector<BigRational> ratios(const TermStore& store, std::int64_t lo, std::int64_t hi) {
  store.require(lo, hi + 1, "ratios");
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (store[n].is_zero()) {
      throw std::domain_error(store.name() + ": zero term at n=" + std::to_string(n) + " in ratio range");
    }
    out.emplace_back(store[n + 1], store[n]);
  }
  return out;
}

}  // namespace logcert
