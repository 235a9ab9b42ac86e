#pragma once

#include <ostream>

namespace teich {

// Entry point of the `teich` command-line tool. Returns the process exit
// code: 0 on success, 2 for invalid input, 3 for geometric failures.
// Diagnostics go to `err` as a single `ERROR <code>: <detail>` line.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace teich
