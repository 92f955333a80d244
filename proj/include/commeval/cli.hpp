#pragma once

#include <iosfwd>

namespace commeval {

/// Entry point of the `commeval` tool. Exit codes: 0 success, 1 usage error,
/// 2 data error. CSV goes to `out` (or files), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace commeval
