#include "logcert/sequence/bfile.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace logcert {

void write_bfile(const TermStore& store, std::ostream& out) {
  if (store.empty()) throw BFileError("refusing to write an empty b-file for " + store.name());
  for (std::int64_t n = store.first_index(); n <= store.last_index(); ++n) {
    out << n << ' ' << store[n] << '\n';
  }
}

void write_bfile(const TermStore& store, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw BFileError("cannot open " + path.string() + " for writing");
  write_bfile(store, out);
  out.flush();
  if (!out) throw BFileError("write failed for " + path.string());
}

TermStore read_bfile(std::istream& in, std::string name) {
  std::vector<BigInt> terms;
  std::int64_t first = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) {
      throw BFileError("line " + std::to_string(line_no) + ": expected \"n value\", got \"" + line + "\"");
    }
    std::int64_t n = 0;
    BigInt value;
    try {
      n = BigInt::from_string(index_text).to_int64();
      value = BigInt::from_string(value_text);
    } catch (const std::exception&) {
      throw BFileError("line " + std::to_string(line_no) + ": malformed integer in \"" + line + "\"");
    }
    if (terms.empty()) {
      first = n;
    } else {
      std::int64_t expected = first + static_cast<std::int64_t>(terms.size());
      if (n != expected) {
        throw BFileError("line " + std::to_string(line_no) + ": gap in indices, expected n=" +
                         std::to_string(expected) + " but found n=" + std::to_string(n));
      }
    }
    terms.push_back(std::move(value));
  }
  if (terms.empty()) throw BFileError("b-file contains no terms");
  return TermStore(std::move(name), first, std::move(terms));
}

TermStore read_bfile(const std::filesystem::path& path, std::string name) {
  std::ifstream in(path);
  if (!in) throw BFileError("cannot open " + path.string());
  if (name.empty()) name = path.stem().string();
  return read_bfile(in, std::move(name));
}

}  // namespace logcert
