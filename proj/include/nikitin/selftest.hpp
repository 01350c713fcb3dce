#pragma once

#include <iosfwd>

namespace nikitin {

/// Special-function identities plus a short analytic-vs-oracle comparison.
/// Writes one line per check; returns true when every check passes.
bool selftest(std::ostream& os);

}  // namespace nikitin
