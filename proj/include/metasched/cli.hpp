#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metasched::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out` (or files named by flags), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version_text();

}  // namespace metasched::cli
