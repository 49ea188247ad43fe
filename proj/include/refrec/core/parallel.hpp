#pragma once

#include <cstdint>
#include <functional>

namespace refrec {

// Global worker-count cap (CLI --threads). 0 = hardware concurrency.
void set_max_threads(int n);
int max_threads();

// Splits [0, n) into one contiguous range per worker and runs f(begin, end)
// on each. Ranges are a pure function of (n, worker count), so any
// range-local results merged in range order are schedule-independent.
void parallel_ranges(int64_t n, const std::function<void(int64_t, int64_t, int)>& f);

// Convenience per-index map; f must write only to disjoint locations.
void parallel_for(int64_t n, const std::function<void(int64_t)>& f);

}  // namespace refrec
