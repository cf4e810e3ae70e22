#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logcert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns 0 when every
/// requested check holds or is certified, 1 on a refutation, 2 on usage or
/// input errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logcert
