#pragma once

#include <cstddef>
#include <functional>

namespace qschur {

/// Worker cap: QSCHUR_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Splits [0, n) into contiguous chunks run on up to worker_count() threads.
/// Chunks smaller than min_chunk are not split further. Exceptions thrown by
/// a chunk are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 1);

}  // namespace qschur
