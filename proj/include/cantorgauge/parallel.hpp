#pragma once

#include <cstddef>
#include <functional>

namespace cantorgauge {

// Caps the worker count used by batch operations (cover sums, DP cost rows,
// grid checks). Results are deterministic for any setting: workers fill
// disjoint slots of preallocated buffers and reductions run in fixed order.
void set_max_threads(int threads);
int max_threads();

// Runs fn(begin, end) over disjoint chunks of [0, n), possibly concurrently.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace cantorgauge
