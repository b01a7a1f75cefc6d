#pragma once

#include <iosfwd>

namespace beba::cli {

/// Runs the `beba` command line. Output files go to --out when given,
/// otherwise to `out`. Returns the process exit code: 0 on success, 2 on
/// usage or parse errors, 3 when a modelling precondition fails.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace beba::cli
