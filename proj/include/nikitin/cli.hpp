#pragma once

#include <iosfwd>

namespace nikitin {

/// Command-line entry point. Exit codes: 0 success, 1 numerical or I/O
/// failure (including a failed selftest), 2 usage or configuration error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nikitin
