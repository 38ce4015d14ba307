#pragma once

#include <iosfwd>

namespace tourrank {

// Command-line driver. Returns 0 on success, 2 on input errors, 3 when a
// solve hits its band-width or state-budget guard.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tourrank
