#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsadist::cli {

enum ExitCode : int {
    kOk = 0,
    kBadFlags = 2,
    kUnreadableInput = 3,
    kSizeLimit = 4,
};

// Runs `wsadist <args...>` with the given streams standing in for
// stdin/stdout/stderr. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace wsadist::cli
