#pragma once

#include <iosfwd>

namespace vibronic::cli {

// Full command-line surface.  Data goes to `out` (or --out PATH), diagnostics to
// `err`.  Exit codes: 0 success, 2 argument errors, 3 numerical failures.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vibronic::cli
