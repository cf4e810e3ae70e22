#pragma once

// Sequence definitions: a restricted binomial-sum grammar and/or a linear
// recurrence with integer polynomial coefficients, plus seed terms.

#include "logcert/exact/bigint.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logcert {

class DefinitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BinomialKind {
  n_choose_k,         // binom(n, k)
  n_plus_k_choose_k,  // binom(n + k, k)
  central,            // binom(2k, k)
};

std::string_view to_string(BinomialKind kind);
/// Accepts the spellings produced by to_string: "binom(n,k)", "binom(n+k,k)", "binom(2k,k)".
std::optional<BinomialKind> parse_binomial_kind(std::string_view text);

struct BinomialFactor {
  BinomialKind kind;
  unsigned exponent = 1;
};

/// slope * k + intercept
struct LinearForm {
  BigInt slope;
  BigInt intercept;
  [[nodiscard]] BigInt at(std::int64_t k) const { return slope * BigInt(k) + intercept; }
};

/// sum_{k=0}^{n} prod(factors) * numerator(k) / denominator(k)
struct BinomialSummand {
  std::vector<BinomialFactor> factors;
  std::optional<LinearForm> numerator;
  std::optional<LinearForm> denominator;
};

/// Integer polynomial in n, coefficients in ascending degree.
struct IntPolynomial {
  std::vector<BigInt> coeffs;
  [[nodiscard]] BigInt at(const BigInt& n) const;
  [[nodiscard]] bool is_zero() const;
};

/// sum_{j=0}^{order} coeffs[j](n) * z_{n+j} = 0
struct Recurrence {
  std::vector<IntPolynomial> coeffs;
  [[nodiscard]] std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

struct SequenceDef {
  std::string name;
  std::optional<BinomialSummand> summand;
  std::optional<Recurrence> recurrence;
  std::int64_t offset = 0;           // index of initial_terms[0]
  std::vector<BigInt> initial_terms;

  /// Throws DefinitionError naming the violated invariant.
  void validate() const;
};

/// R_n = sum_k binom(n,k) binom(n+k,k) / (2k-1), with its order-3 recurrence.
SequenceDef builtin_R();
/// S_n = sum_k binom(n,k)^2 binom(2k,k) (2k+1), with its order-3 recurrence.
SequenceDef builtin_S();

/// Deterministic text form used for content hashing.
std::string canonical_text(const SequenceDef& def);
/// FNV-1a 64 over canonical_text.
std::uint64_t content_hash(const SequenceDef& def);

}  // namespace logcert
