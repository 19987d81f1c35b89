#pragma once

#include <cstddef>
#include <functional>

namespace stratsys {

/// Worker count from STRATSYS_JOBS (default 1).
unsigned default_jobs();

/// Runs body(0..n-1) on up to `jobs` threads. Callers write results into
/// per-index slots, so aggregation order does not depend on scheduling.
/// The first exception thrown by a task is rethrown after all threads join.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace stratsys
