#pragma once

#include <functional>

namespace partalg {

// Worker pool size: the PARTALG_THREADS environment variable when set to a
// positive integer, otherwise the hardware concurrency (at least 1).
int worker_count();

// Runs fn(0..count-1) across the worker pool in contiguous chunks. Callers
// must make the aggregation order-independent.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace partalg
