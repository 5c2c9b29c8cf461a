#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

[[noreturn]] inline void die(const std::string &msg) {
    std::fprintf(stderr, "fatal: %s\n", msg.c_str());
    std::abort();
}

inline void check(bool ok, const std::string &msg) {
    if (!ok) die(msg);
}

// Runs f(i) for i in [0,count) on up to nthreads workers.  Results must be
// written to pre-sized slots so the outcome is independent of scheduling.
inline void parallel_for(size_t count, int nthreads, const std::function<void(size_t)> &f) {
    if (nthreads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; i++) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    int nw = std::min<size_t>(nthreads, count);
    for (int w = 0; w < nw; w++) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
}

inline int default_threads() {
    if (const char *env = std::getenv("PUZZLE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}
