#pragma once

#include <iosfwd>

namespace gmet::cli {

// Dispatches one subcommand. Returns 0 on success, 1 on domain errors
// (diagnostic on err), 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmet::cli
