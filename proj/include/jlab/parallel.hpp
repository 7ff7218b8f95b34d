#pragma once

#include <cstddef>
#include <functional>

namespace jlab {

// Worker count: JLAB_THREADS if set (>= 1), else hardware concurrency.
unsigned default_thread_count();

// Runs body(i) for every i in [0, count) on up to `threads` workers
// (0 = default_thread_count()). Work is claimed dynamically, so body must
// write only to per-index state. The first exception thrown by any body is
// rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace jlab
