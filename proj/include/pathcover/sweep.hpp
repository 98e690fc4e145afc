#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathcover::sweep {

// Batch kernels for the verification sweeps.  Every kernel exists in two
// lanes selected by `parallel`: a plain serial loop (the reference) and an
// OpenMP loop over the same per-index function.  Results are written by
// index, so both lanes produce identical output for any thread count.

// out[i] = fn(i).  fn must be safe to call concurrently; num_threads <= 0
// leaves the OpenMP default in place.
template <class R, class Fn>
std::vector<R> map_indexed(std::size_t count, Fn&& fn, bool parallel, int num_threads = 0) {
    std::vector<R> out(count);
#ifdef _OPENMP
    if (parallel) {
        const auto n = static_cast<std::int64_t>(count);
        // chunked dynamic scheduling: amortizes dispatch for cheap items,
        // still balances the skewed solver workloads
        if (num_threads > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(num_threads)
            for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } else {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        }
        return out;
    }
#else
    (void)parallel;
    (void)num_threads;
#endif
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

struct Ramsey33Result {
    bool every_order6_graph_ok = false;  // each has K_3 or an independent 3-set
    std::uint32_t first_bad_mask = 0;    // witness when the line above fails
    bool c5_has_neither = false;         // the pentagon separates R(3,3) > 5

    bool holds() const { return every_order6_graph_ok && c5_has_neither; }
};

// Exhaustive scan of all 2^15 labeled graphs of order 6.
Ramsey33Result ramsey33_scan(bool parallel, int num_threads = 0);

}  // namespace pathcover::sweep
