#ifndef QMOCK_PARALLEL_HPP
#define QMOCK_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace qmock {

inline int default_thread_count() {
    if (const char* env = std::getenv("QMOCK_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

// Deterministic parallel loop: body(i) writes only to slot i of caller-owned
// storage, so the merge order never depends on scheduling.
template <typename F>
void parallel_for(long begin, long end, int threads, F body) {
    if (end <= begin) return;
    long n = end - begin;
    if (threads <= 1 || n == 1) {
        for (long i = begin; i < end; ++i) body(i);
        return;
    }
    int t = (int)std::min<long>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([=]() {
            for (long i = begin + w; i < end; i += t) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace qmock

#endif
