#pragma once

#include <cstddef>
#include <functional>

namespace wittext {

/// Thread count for parallel loops: the WITT_EXT_THREADS environment
/// variable when set and positive, hardware concurrency otherwise.
unsigned worker_count();

/// Runs fn(i) for i in [0, n), splitting the range over worker_count()
/// threads.  fn must be safe to call concurrently for distinct i; exceptions
/// from workers are rethrown on the calling thread.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace wittext
