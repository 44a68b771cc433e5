#pragma once

#include <cstddef>
#include <functional>

namespace hypermono {

/// Worker count: min(hardware_concurrency, HYPERMONO_THREADS) with a floor of 1.
int thread_count();

/// Runs fn(i) for i in [0, n).  Results must be written to per-index slots so
/// the outcome is identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hypermono
