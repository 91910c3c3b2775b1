#pragma once

#include <functional>

namespace frd {

// Data-parallel width, capped by the FRDVASC_THREADS environment variable
// (default 1). Reductions stay serial so results are bit-reproducible.
int thread_cap();

// Runs fn(begin, end) over disjoint chunks of [0, count). With width 1 this
// is a plain call; otherwise chunks are dispatched to std::thread workers.
// fn must only write to locations indexed by its own chunk.
void parallel_for(int count, const std::function<void(int, int)>& fn);

} // namespace frd
