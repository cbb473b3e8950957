#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtherm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// args excludes the program name. CSV goes to `out` unless --out is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtherm::cli
