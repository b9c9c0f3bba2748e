#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fullex::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). Binary planar_code
// and JSON reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace fullex::cli
