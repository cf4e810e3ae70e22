#pragma once

// Bounded-depth exploration of infinite log-concavity: iterate
// L(z)_n = z_n^2 - z_{n-1} z_{n+1} on a finite window and record signs.
// The output is evidence only.

#include "logcert/analysis/check_result.hpp"
#include "logcert/sequence/term_store.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logcert {

/// L(z) on the input range shrunk by one at each end. Throws
/// std::invalid_argument for fewer than 3 terms.
TermStore l_operator(const TermStore& store);

struct DepthVerdict {
  int depth = 0;
  IndexRange range;
  std::size_t negatives = 0;
  std::size_t zeros = 0;
  std::optional<std::int64_t> first_negative;

  [[nodiscard]] bool nonnegative() const { return negatives == 0; }
  [[nodiscard]] bool positive() const { return negatives == 0 && zeros == 0; }
};

struct ExplorerLedger {
  std::string sequence;
  std::string convention;  // "raw" or "abs"
  std::string label = "bounded-depth evidence";
  std::vector<DepthVerdict> depths;  // depth 0 is the input window itself
};

/// Applies l_operator `depth` times to the window [start, start+window-1]
/// and records signs at every depth. Throws std::invalid_argument when the
/// window would be exhausted (window - 2*depth < 1).
ExplorerLedger explore_infinite_log_concavity(const TermStore& store, std::int64_t start, int depth,
                                              std::int64_t window, std::string convention = "raw");

/// |z_n| termwise; the "abs" convention explores this once-absolute sequence.
TermStore absolute_values(const TermStore& store);

}  // namespace logcert
