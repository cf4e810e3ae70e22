#include "logcert/analysis/explorer.hpp"

#include <stdexcept>

namespace logcert {

TermStore l_operator(const TermStore& store) {
  if (store.size() < 3) {
    throw std::invalid_argument("L operator needs at least 3 terms, " + store.name() + " has " +
                                std::to_string(store.size()));
  }
  std::vector<BigInt> out;
  out.reserve(store.size() - 2);
  for (std::int64_t n = store.first_index() + 1; n < store.last_index(); ++n) {
    out.push_back(store[n] * store[n] - store[n - 1] * store[n + 1]);
  }
  return TermStore("L(" + store.name() + ")", store.first_index() + 1, std::move(out));
}

TermStore absolute_values(const TermStore& store) {
  std::vector<BigInt> out;
  out.reserve(store.size());
  for (const auto& z : store.terms()) out.push_back(z.abs());
  return TermStore("|" + store.name() + "|", store.first_index(), std::move(out));
}

ExplorerLedger explore_infinite_log_concavity(const TermStore& store, std::int64_t start, int depth,
                                              std::int64_t window, std::string convention) {
  if (depth < 0) throw std::invalid_argument("explorer: depth must be non-negative");
  if (window - 2 * static_cast<std::int64_t>(depth) < 1) {
    throw std::invalid_argument("explorer: window of " + std::to_string(window) + " terms is exhausted before depth " +
                                std::to_string(depth) + " (each application of L drops 2 terms)");
  }
  TermStore current = store.slice(start, start + window - 1);
  ExplorerLedger ledger{.sequence = store.name(), .convention = std::move(convention)};
  for (int d = 0;; ++d) {
    DepthVerdict v{.depth = d, .range = {current.first_index(), current.last_index()}};
    for (std::int64_t n = current.first_index(); n <= current.last_index(); ++n) {
      int s = current[n].sign();
      if (s == 0) ++v.zeros;
      if (s < 0) {
        if (!v.first_negative) v.first_negative = n;
        ++v.negatives;
      }
    }
    ledger.depths.push_back(v);
    if (d == depth) break;
    current = l_operator(current);
  }
  return ledger;
}

}  // namespace logcert
