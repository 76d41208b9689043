#pragma once

#include <cstddef>
#include <functional>

namespace qgtile {

/// Number of workers used by the parallel drivers: hardware concurrency,
/// capped by the QGTILE_THREADS environment variable when it is set.
std::size_t worker_count();

/// Calls body(i) for every i in [0, n). Iterations are split into contiguous
/// blocks, one per worker; body must only write to per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qgtile
