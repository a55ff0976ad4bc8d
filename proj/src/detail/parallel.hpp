#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace linkdim::detail {

inline int clamp_threads(int requested) {
    return std::clamp(requested, 1, 64);
}

// Runs fn(i) for every i in [0, n). With threads > 1 workers pull indices
// from a shared counter; fn must only touch per-index state, so the combined
// result is independent of scheduling.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
    threads = std::min(clamp_threads(threads), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads) - 1);
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

} // namespace linkdim::detail
