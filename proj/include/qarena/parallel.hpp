#pragma once

#include <cstdint>
#include <functional>

namespace qarena {

/// Caps the number of worker threads used by parallel_for. 0 restores the
/// hardware default.
void set_max_threads(int n);
int max_threads();

/// Runs fn(i) for i in [0, count). Work is split statically across threads;
/// results must be written to disjoint, preallocated slots so the outcome is
/// independent of the thread count. The first exception thrown by any worker
/// is rethrown on the calling thread.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn);

}  // namespace qarena
