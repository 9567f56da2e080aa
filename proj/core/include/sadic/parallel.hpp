#pragma once

#include <cstddef>
#include <functional>

namespace sadic {

/// Worker count from SADIC_WORKERS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs fn(i) for i in [0, n) across worker_count() threads. Each index is
/// visited exactly once; callers write results into per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace sadic
