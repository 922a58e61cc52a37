#pragma once

#include <iosfwd>

namespace algdist {

/// Entry point of the `algdist` command-line tool. Subcommands: distance,
/// match, hpart, diag, bench. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace algdist
