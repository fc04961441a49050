#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meg::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // set is not an MEG-set, or the failure went undetected
    kInputError = 2,
    kDisconnected = 3,
    kCapExceeded = 4,
    kUnrecognizedClass = 5,
};

/// Runs the command line tool. args excludes the program name; "-" as a
/// file argument reads the graph from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace meg::cli
