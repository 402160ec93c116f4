#pragma once

// Command-line surface: construct, verify, count, bounds, oracle and report
// over the shared file formats. Exit codes: 0 success, 1 verification
// violation or failed consistency check, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace cubefree::cli {

// args excludes the program name. Streams are injected for testability.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cubefree::cli
