#pragma once

#include <functional>

namespace qsec {

// Number of workers parallel_for may use: hardware concurrency, capped by
// the QUTRIT_SECTIONS_THREADS environment variable when set. At least 1.
int worker_count();

// Runs fn(i) for i in [0, n). Work is sharded by index stride, so the
// mapping of iterations to workers is deterministic; callers keep results
// deterministic by writing into index-addressed slots. The first exception
// thrown by any worker is rethrown after all workers join.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace qsec
