#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motivic::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitDivergent = 3;
inline constexpr int kExitInconclusive = 4;
inline constexpr int kExitPrecision = 5;

inline constexpr long kDefaultFloor = -16;
inline constexpr long kDefaultCap = 12;

// Runs the tool on args (args[0] is the program name). Problem files named
// "-" are read from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace motivic::cli
