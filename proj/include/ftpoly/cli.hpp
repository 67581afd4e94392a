#pragma once

#include <iosfwd>

namespace ftpoly {

// Entry point of the ftpoly command-line tool. Returns 0 on success, 1 on a
// domain error and 2 on a usage error; messages go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftpoly
