#pragma once

#include <cstddef>
#include <functional>

namespace enskog {

// Worker count: ENSKOG_NUM_THREADS if set to a positive integer, otherwise
// the hardware concurrency. Results never depend on the count.
int thread_count();

// Runs body(i) for i in [0, n), partitioned across threads. Each invocation
// must write only to its own output slot; no ordering is guaranteed.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace enskog
