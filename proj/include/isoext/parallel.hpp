#pragma once

#include <functional>

namespace isoext {

/// Number of worker threads: requested > 0 wins, then ISOEXT_THREADS,
/// then the hardware concurrency.
int resolve_thread_count(int requested = 0);

/// Run fn(i) for i in [0, n) on up to `threads` workers. Work items must
/// write to disjoint slots; exceptions are rethrown on the caller.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace isoext
