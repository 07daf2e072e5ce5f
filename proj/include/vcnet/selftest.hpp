#pragma once

#include <iosfwd>

namespace vcnet {

// Cross-checks the deterministic evaluators against independent
// Monte Carlo oracles and exact identities, printing one line per check.
// Returns the number of failed checks.
int run_selftest(std::ostream& out);

}  // namespace vcnet
