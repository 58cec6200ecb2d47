// Deterministic chunked parallel-for.
//
// Work items are indexed 0..n-1 and each worker writes only to slots it
// owns, so results are independent of thread count and scheduling.  The
// thread count is hardware_concurrency capped by the NQL_THREADS
// environment variable (values < 1 mean "run sequentially").
#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace normcert {

inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("NQL_THREADS")) {
        try {
            long cap = std::stol(env);
            if (cap < 1) return 1;
            hw = std::min<long>(hw, cap);
        } catch (...) {
            // Unparsable values are ignored; fall back to hardware count.
        }
    }
    return hw;
}

// Calls f(i) for every i in [0, n).  f must only touch state owned by
// index i (typically a pre-sized output vector slot).  Exceptions thrown
// by any worker are rethrown (one of them) on the calling thread.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    unsigned workers = thread_budget();
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr failure;
    std::mutex failure_mu;
    // Static block partition: worker w handles [lo_w, hi_w).
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = n * w / workers;
        std::size_t hi = n * (w + 1) / workers;
        pool.emplace_back([&, lo, hi]() {
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace normcert
