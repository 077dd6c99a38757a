#pragma once

#include <cstddef>
#include <functional>

namespace meshkit {

// Runs fn(begin, end) over disjoint chunks of [0, n) on up to `threads`
// workers (0 = hardware concurrency). Callers keep determinism by writing
// results through the index only; chunk boundaries never change output.
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn, unsigned threads = 0);

// Global default for parallel_for thread counts; 0 = hardware concurrency.
void set_default_threads(unsigned threads);
unsigned default_threads();

}  // namespace meshkit
