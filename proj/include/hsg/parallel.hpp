#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hsg {

inline int thread_count() {
    if (const char* env = std::getenv("HSG_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Static block partition; results must be written to per-index slots so the
// outcome is independent of the thread count.
inline void parallel_for(int n, const std::function<void(int)>& body) {
    int nt = std::min(thread_count(), n);
    if (nt <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int w = 0; w < nt; ++w) {
        pool.emplace_back([=, &body] {
            for (int i = w; i < n; i += nt) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace hsg
