#pragma once

#include "logcert/exact/bigint.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace logcert {

/// Immutable contiguous table n -> z_n for first_index <= n <= last_index.
class TermStore {
 public:
  TermStore(std::string name, std::int64_t first_index, std::vector<BigInt> terms);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::int64_t first_index() const { return first_; }
  /// first_index - 1 for an empty store.
  [[nodiscard]] std::int64_t last_index() const {
    return first_ + static_cast<std::int64_t>(terms_.size()) - 1;
  }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  [[nodiscard]] bool contains(std::int64_t n) const { return n >= first_ && n <= last_index(); }
  [[nodiscard]] bool covers(std::int64_t lo, std::int64_t hi) const {
    return lo <= hi && contains(lo) && contains(hi);
  }

  /// Throws std::out_of_range naming the store and index.
  [[nodiscard]] const BigInt& term(std::int64_t n) const;
  const BigInt& operator[](std::int64_t n) const { return term(n); }

  [[nodiscard]] std::span<const BigInt> terms() const { return terms_; }

  /// Throws std::out_of_range unless the store covers [lo, hi].
  void require(std::int64_t lo, std::int64_t hi, const std::string& what) const;

  [[nodiscard]] TermStore slice(std::int64_t lo, std::int64_t hi) const;
  /// Copy with z_n replaced; used for fault injection.
  [[nodiscard]] TermStore with_term(std::int64_t n, BigInt value) const;
  [[nodiscard]] TermStore renamed(std::string name) const;

  friend bool operator==(const TermStore& a, const TermStore& b) {
    return a.first_ == b.first_ && a.terms_ == b.terms_;
  }

 private:
  std::string name_;
  std::int64_t first_;
  std::vector<BigInt> terms_;
};

}  // namespace logcert
