#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hyperricci {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// Runs body(begin, end) over a static partition of [0, n). Callers write results by item
// index, so output is bit-identical for every thread count and schedule.
inline void parallel_for(std::int64_t n, int threads,
                         const std::function<void(std::int64_t, std::int64_t)>& body) {
    if (n <= 0) return;
    threads = resolve_threads(threads);
    if (threads > n) threads = int(n);
    if (threads <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::int64_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::int64_t b = t * chunk;
        std::int64_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(body, b, e);
    }
    for (auto& th : pool) th.join();
}

}  // namespace hyperricci
