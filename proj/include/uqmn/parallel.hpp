#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace uqmn {

/// Default worker count: UQMN_THREADS if set, else hardware concurrency.
inline unsigned default_threads() {
    if (const char* env = std::getenv("UQMN_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Run fn(i) for i in [0, n); results must be written to pre-sized slots so
/// the aggregation order (and therefore every report) is independent of the
/// thread count.
template <class Fn>
void parallel_for(size_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(std::min<size_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace uqmn
