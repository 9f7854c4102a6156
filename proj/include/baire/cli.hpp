#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baire {

// Exit codes of the baire_lab tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInconclusive = 3;

// Runs one baire_lab invocation. args excludes the program name. The JSON
// report goes to out; diagnostics and the --summary text go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baire
