#pragma once

// OEIS b-file text format: one "n value" pair per line, ascending and
// contiguous in n. Lines starting with '#' and blank lines are skipped on read.

#include "logcert/sequence/definition.hpp"
#include "logcert/sequence/generate.hpp"
#include "logcert/sequence/term_store.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace logcert {

class BFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_bfile(const TermStore& store, std::ostream& out);
void write_bfile(const TermStore& store, const std::filesystem::path& path);

TermStore read_bfile(std::istream& in, std::string name);
TermStore read_bfile(const std::filesystem::path& path, std::string name = {});

/// Persists generated terms as `<root>/<name>-<hash>.bfile`.
class TermCache {
 public:
  static constexpr const char* kEnvVar = "LOGCERT_CACHE";

  explicit TermCache(std::filesystem::path root);

  /// Root from the LOGCERT_CACHE environment variable, if set and nonempty.
  static std::optional<std::filesystem::path> root_from_env();

  [[nodiscard]] const std::filesystem::path& root() const { return root_; }
  [[nodiscard]] std::filesystem::path path_for(const SequenceDef& def) const;

  /// Cached terms on [def.offset, upto], if the cache holds at least that many.
  [[nodiscard]] std::optional<TermStore> load(const SequenceDef& def, std::int64_t upto) const;

  /// Throws BFileError when the directory or file cannot be written.
  void save(const SequenceDef& def, const TermStore& store) const;

  /// Serves from the cache when possible; otherwise generates and saves.
  TermStore load_or_build(const SequenceDef& def, std::int64_t upto, Method method) const;

 private:
  std::filesystem::path root_;
};

}  // namespace logcert
