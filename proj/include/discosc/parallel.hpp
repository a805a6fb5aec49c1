#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace discosc {

/// Worker count: DISC_OSC_THREADS if set, else 1. Grid reductions below are
/// bit-identical for any count because partial results are merged in index
/// order.
inline int thread_count() {
    if (const char* env = std::getenv("DISC_OSC_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

/// Map [0, n) with fn(i) on `threads` workers in contiguous blocks.
template <typename F>
void parallel_for(int64_t n, F&& fn, int threads = thread_count()) {
    if (threads <= 1 || n < 2 * threads) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const int64_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int64_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace discosc
