#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rolestat::cli {

// Exit statuses of the rolestat command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFormat = 2;
inline constexpr int kExitIo = 3;

// Runs the command line `args` (args[0] is the program name). Tables go to
// `out` unless --out names a file; diagnostics go to `err`. Output is
// rendered completely before anything is written, so a failing command
// emits nothing on `out` and leaves no file behind.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rolestat::cli
