#pragma once

#include <cstdint>
#include <functional>

namespace lfdepth {

// Global worker count used by all parallel kernels. 0 picks
// hardware_concurrency. Results never depend on this value: work is split
// into chunks whose boundaries depend only on the problem size, and
// reductions combine per-chunk partials in chunk order.
void set_num_threads(int n);
int num_threads();

// Partition of [0, n) used by the parallel loops below.
int64_t chunk_count(int64_t n);
void chunk_bounds(int64_t n, int64_t chunk, int64_t* begin, int64_t* end);

// Runs fn(chunk_index, begin, end) over all chunks. fn must only write to
// data owned by its chunk (or indexed by chunk_index).
void parallel_for_chunks(int64_t n, const std::function<void(int64_t, int64_t, int64_t)>& fn);

// Element-wise convenience wrapper; fn(i) must own everything it writes.
void parallel_for(int64_t n, const std::function<void(int64_t)>& fn);

// Deterministic sum of term(i) for i in [0, n): per-chunk partial sums are
// accumulated in index order and combined in chunk order.
double parallel_sum(int64_t n, const std::function<double(int64_t)>& term);

}  // namespace lfdepth
