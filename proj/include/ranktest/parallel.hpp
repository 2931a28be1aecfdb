#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ranktest::detail {

/// Runs fn(index) for every index in [0, n) across `threads` workers
/// (0 = hardware concurrency). Work is split by static interleaving and
/// callers write results into per-index slots, so the outcome is identical
/// for any thread count. The first worker exception is rethrown after all
/// workers join.
inline void parallel_for(long long n, int threads, const std::function<void(long long)>& fn) {
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || n <= 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (long long i = t; i < n; i += threads) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace ranktest::detail
