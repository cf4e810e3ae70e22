#include "logcert/cli/custom_def.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace logcert {

namespace {

using nlohmann::json;

struct Parser {
  std::string origin;

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw DefinitionError(origin + ": field '" + field + "': " + message);
  }

  BigInt integer(const json& v, const std::string& field) const {
    if (v.is_number_integer()) return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
    if (v.is_string()) {
      try {
        return BigInt::from_string(v.get<std::string>());
      } catch (const std::exception&) {
        fail(field, "\"" + v.get<std::string>() + "\" is not an integer");
      }
    }
    fail(field, "expected an integer or a decimal string, got " + std::string(v.type_name()));
  }

  const json& member(const json& obj, const char* key, const std::string& field) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(field + key, "is required");
    return *it;
  }

  LinearForm linear(const json& v, const std::string& field) const {
    if (!v.is_array() || v.size() != 2) fail(field, "expected [slope, intercept]");
    return {integer(v[0], field + "[0]"), integer(v[1], field + "[1]")};
  }

  BinomialSummand summand(const json& v) const {
    const std::string f = "summand";
    if (!v.is_object()) fail(f, "expected an object");
    BinomialSummand s;
    const json& factors = member(v, "factors", f + ".");
    if (!factors.is_array()) fail(f + ".factors", "expected an array");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::string at = f + ".factors[" + std::to_string(i) + "]";
      const json& item = factors[i];
      if (!item.is_object()) fail(at, "expected an object with \"kind\" and optional \"exponent\"");
      const json& kind = member(item, "kind", at + ".");
      if (!kind.is_string()) fail(at + ".kind", "expected a string");
      auto parsed = parse_binomial_kind(kind.get<std::string>());
      if (!parsed) {
        fail(at + ".kind", "unknown binomial \"" + kind.get<std::string>() +
                               "\" (use binom(n,k), binom(n+k,k) or binom(2k,k))");
      }
      unsigned exponent = 1;
      if (auto e = item.find("exponent"); e != item.end()) {
        if (!e->is_number_unsigned() || e->get<std::uint64_t>() == 0) {
          fail(at + ".exponent", "expected a positive integer");
        }
        exponent = static_cast<unsigned>(e->get<std::uint64_t>());
      }
      s.factors.push_back({*parsed, exponent});
    }
    if (auto n = v.find("numerator"); n != v.end()) s.numerator = linear(*n, f + ".numerator");
    if (auto d = v.find("denominator"); d != v.end()) s.denominator = linear(*d, f + ".denominator");
    return s;
  }

  Recurrence recurrence(const json& v) const {
    const std::string f = "recurrence";
    if (!v.is_object()) fail(f, "expected an object");
    const json& coeffs = member(v, "coefficients", f + ".");
    if (!coeffs.is_array()) fail(f + ".coefficients", "expected an array of coefficient lists");
    Recurrence r;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const std::string at = f + ".coefficients[" + std::to_string(j) + "]";
      if (!coeffs[j].is_array()) fail(at, "expected a list of integers (ascending powers of n)");
      IntPolynomial p;
      for (std::size_t i = 0; i < coeffs[j].size(); ++i) {
        p.coeffs.push_back(integer(coeffs[j][i], at + "[" + std::to_string(i) + "]"));
      }
      r.coeffs.push_back(std::move(p));
    }
    return r;
  }
};

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json to_json(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

}  // namespace

SequenceDef parse_custom_definition(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw DefinitionError(std::string(origin) + ": " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + what);
  }
  Parser p{std::string(origin)};
  if (!doc.is_object()) p.fail("<root>", "expected a JSON object");

  static const char* const known[] = {"name", "offset", "summand", "recurrence", "initial_terms"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) p.fail(key, "unknown field");
  }

  SequenceDef def;
  const json& name = p.member(doc, "name", "");
  if (!name.is_string() || name.get<std::string>().empty()) p.fail("name", "expected a non-empty string");
  def.name = name.get<std::string>();
  if (auto o = doc.find("offset"); o != doc.end()) {
    if (!o->is_number_integer()) p.fail("offset", "expected an integer");
    def.offset = o->get<std::int64_t>();
  }
  if (auto s = doc.find("summand"); s != doc.end()) def.summand = p.summand(*s);
  if (auto r = doc.find("recurrence"); r != doc.end()) def.recurrence = p.recurrence(*r);
  if (auto t = doc.find("initial_terms"); t != doc.end()) {
    if (!t->is_array()) p.fail("initial_terms", "expected an array");
    for (std::size_t i = 0; i < t->size(); ++i) {
      def.initial_terms.push_back(p.integer((*t)[i], "initial_terms[" + std::to_string(i) + "]"));
    }
  }
  try {
    def.validate();
  } catch (const DefinitionError& e) {
    throw DefinitionError(std::string(origin) + ": " + e.what());
  }
  return def;
}

SequenceDef load_custom_definition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DefinitionError("cannot open definition file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_custom_definition(text.str(), path.string());
}

std::string definition_to_json(const SequenceDef& def) {
  json doc = json::object();
  doc["name"] = def.name;
  doc["offset"] = def.offset;
  if (def.summand) {
    json s = json::object();
    json factors = json::array();
    for (const auto& f : def.summand->factors) {
      factors.push_back({{"kind", std::string(to_string(f.kind))}, {"exponent", f.exponent}});
    }
    s["factors"] = factors;
    if (def.summand->numerator) {
      s["numerator"] = json::array({to_json(def.summand->numerator->slope), to_json(def.summand->numerator->intercept)});
    }
    if (def.summand->denominator) {
      s["denominator"] = json::array({to_json(def.summand->denominator->slope), to_json(def.summand->denominator->intercept)});
    }
    doc["summand"] = s;
  }
  if (def.recurrence) {
    json coeffs = json::array();
    for (const auto& p : def.recurrence->coeffs) {
      json c = json::array();
      for (const auto& v : p.coeffs) c.push_back(to_json(v));
      coeffs.push_back(c);
    }
    doc["recurrence"] = {{"coefficients", coeffs}};
  }
  json terms = json::array();
  for (const auto& t : def.initial_terms) terms.push_back(to_json(t));
  doc["initial_terms"] = terms;
  return doc.dump(2) + "\n";
}

}  // namespace logcert
