#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace veds::cli {

// Exit codes: 0 success, 1 domain or contract error, 2 input or parse
// error, 3 capacity error. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace veds::cli
