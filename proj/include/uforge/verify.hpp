#pragma once

#include <string>
#include <vector>

#include "uforge/report.hpp"

namespace uforge {

// Suite names understood by run_suite; "all" concatenates the others in
// this order.
const std::vector<std::string>& verification_suites();

// Runs one verification suite under the given bounds. Checks are spread
// over config.parallel workers; the check list and every expected/computed
// rendering depend only on the config, never on scheduling. A check that
// raises is recorded as failed and the run continues. Checks priced above
// roughly ten seconds are emitted as skip records unless config.long_checks
// is set.
SuiteReport run_suite(const std::string& suite, const RunConfig& config);

}  // namespace uforge
