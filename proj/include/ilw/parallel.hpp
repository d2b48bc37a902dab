#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ilw {

/// Run f(i) for i in [0, n) on up to hardware_concurrency() threads.
/// Work is split into contiguous blocks; results must be written to
/// per-index slots so the outcome is schedule-independent.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw < 2 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(hw, n);
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mtx;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            const std::size_t lo = n * t / nthreads;
            const std::size_t hi = n * (t + 1) / nthreads;
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mtx);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace ilw
