#pragma once

#include <cstddef>
#include <functional>

namespace aocc {

/// Worker count: AOCC_THREADS when set to a positive integer, otherwise the
/// hardware concurrency, never less than one.
unsigned worker_count();

/// Calls task(i) for every i in [0, n) on up to `workers` threads (0 means
/// worker_count()). Indices are claimed dynamically; the first exception
/// thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task,
                  unsigned workers = 0);

}  // namespace aocc
