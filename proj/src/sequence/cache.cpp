#include <cstdio>
#include <cstdlib>
#include <system_error>

#include "logcert/sequence/bfile.hpp"

namespace logcert {

TermCache::TermCache(std::filesystem::path root) : root_(std::move(root)) {}

std::optional<std::filesystem::path> TermCache::root_from_env() {
  const char* value = std::getenv(kEnvVar);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

std::filesystem::path TermCache::path_for(const SequenceDef& def) const {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(content_hash(def)));
  return root_ / (def.name + "-" + hex + ".bfile");
}

std::optional<TermStore> TermCache::load(const SequenceDef& def, std::int64_t upto) const {
  auto path = path_for(def);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  TermStore cached = read_bfile(path, def.name);
  if (cached.first_index() != def.offset || cached.last_index() < upto) return std::nullopt;
  return cached.slice(def.offset, upto);
}

void TermCache::save(const SequenceDef& def, const TermStore& store) const {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) throw BFileError("cannot create cache directory " + root_.string() + ": " + ec.message());
  auto path = path_for(def);
  auto tmp = path;
  tmp += ".tmp";
  write_bfile(store, tmp);
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw BFileError("cannot move " + tmp.string() + " into place: " + ec.message());
}

TermStore TermCache::load_or_build(const SequenceDef& def, std::int64_t upto, Method method) const {
  if (auto cached = load(def, upto)) return *std::move(cached);
  TermStore built = build_terms(def, upto, method);
  save(def, built);
  return built;
}

}  // namespace logcert
