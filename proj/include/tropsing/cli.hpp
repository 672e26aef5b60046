#pragma once

#include <iosfwd>

namespace tropsing {

/// Runs one subcommand. The result JSON goes to `--out` or `out`; failures
/// print an error JSON to `out` and return 1 (domain) or 2 (parse).
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tropsing
