#pragma once

// JSON sequence definitions. Schema (all keys except "name" optional, but at
// least one of "summand" and "recurrence" must be present):
//
//   {
//     "name": "R",
//     "offset": 0,
//     "summand": {
//       "factors": [{"kind": "binom(n,k)", "exponent": 1}, {"kind": "binom(n+k,k)"}],
//       "numerator": [slope, intercept],      // slope*k + intercept
//       "denominator": [2, -1]
//     },
//     "recurrence": {"coefficients": [[c00, c01, ...], [c10, ...], ...]},
//     "initial_terms": [-1, 1, "7"]
//   }
//
// recurrence.coefficients[j] lists the polynomial multiplying z_{n+j}, in
// ascending powers of n. Integers may be JSON numbers or decimal strings.

#include "logcert/sequence/definition.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace logcert {

/// Parses a definition from JSON text. Errors are DefinitionError with the
/// line/column of syntax errors or the path of the offending field.
SequenceDef parse_custom_definition(std::string_view text, std::string_view origin = "<input>");

SequenceDef load_custom_definition(const std::filesystem::path& path);

/// Inverse of parse_custom_definition, used to ship the builtin definitions.
std::string definition_to_json(const SequenceDef& def);

}  // namespace logcert
