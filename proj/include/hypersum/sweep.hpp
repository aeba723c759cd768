#ifndef HYPERSUM_SWEEP_HPP
#define HYPERSUM_SWEEP_HPP

#include <functional>
#include <vector>

#include "hypersum/report.hpp"

namespace hypersum {

// Runs independent verification tasks on `jobs` worker threads and returns
// the reports in task order, so output is deterministic regardless of the
// parallelism level.  Exceptions escaping a task become status=error reports
// when the task wrapper doesn't catch them itself.
std::vector<VerificationReport> run_ordered(
    const std::vector<std::function<VerificationReport()>>& tasks, unsigned jobs);

} // namespace hypersum

#endif
