#pragma once

#include <cstddef>
#include <functional>

namespace inscribe {

// Worker count for parallel loops: INSCRIBE_THREADS if set, otherwise
// hardware concurrency. Always at least 1.
int worker_count();

// Runs fn(i) for i in [0, n) across workers. Callers write results into
// pre-sized storage indexed by i, so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace inscribe
