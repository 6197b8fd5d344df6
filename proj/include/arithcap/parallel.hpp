#pragma once

#include <cstddef>
#include <functional>

namespace arithcap {

// Worker count: ARITHCAP_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
unsigned thread_count();

// Runs body(begin, end) over contiguous chunks of [0, n). Chunk boundaries
// depend only on n and the thread count; callers write into per-index slots so
// results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace arithcap
