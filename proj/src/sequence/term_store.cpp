#include "logcert/sequence/term_store.hpp"

#include <stdexcept>

namespace logcert {

TermStore::TermStore(std::string name, std::int64_t first_index, std::vector<BigInt> terms)
    : name_(std::move(name)), first_(first_index), terms_(std::move(terms)) {}

const BigInt& TermStore::term(std::int64_t n) const {
  if (!contains(n)) {
    throw std::out_of_range(name_ + ": index " + std::to_string(n) + " outside stored range [" +
                            std::to_string(first_) + ", " + std::to_string(last_index()) + "]");
  }
  return terms_[static_cast<std::size_t>(n - first_)];
}

void TermStore::require(std::int64_t lo, std::int64_t hi, const std::string& what) const {
  if (lo > hi) {
    throw std::out_of_range(what + ": empty index range [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
  if (!covers(lo, hi)) {
    throw std::out_of_range(what + " needs " + name_ + " on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "], store holds [" + std::to_string(first_) +
                            ", " + std::to_string(last_index()) + "]");
  }
}

TermStore TermStore::slice(std::int64_t lo, std::int64_t hi) const {
  require(lo, hi, "slice");
  auto begin = terms_.begin() + (lo - first_);
  return TermStore(name_, lo, std::vector<BigInt>(begin, begin + (hi - lo + 1)));
}

TermStore TermStore::with_term(std::int64_t n, BigInt value) const {
  (void)term(n);
  std::vector<BigInt> copy = terms_;
  copy[static_cast<std::size_t>(n - first_)] = std::move(value);
  return TermStore(name_, first_, std::move(copy));
}

TermStore TermStore::renamed(std::string name) const { return TermStore(std::move(name), first_, terms_); }

}  // namespace logcert
