#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace mvdet {

/// Worker cap: MVDET_THREADS env var when set (>= 1), otherwise hardware
/// concurrency. Re-read on every call so tests can flip it at runtime.
int worker_count();

/// Runs fn(i) for i in [0, n). Work items must write to disjoint outputs;
/// results are then identical for any worker count.
template <class F>
void parallel_for(int n, F&& fn) {
    if (n <= 0) return;
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    std::atomic<int> error_guard{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                if (failed.load(std::memory_order_relaxed)) return;
                try {
                    fn(i);
                } catch (...) {
                    if (error_guard.fetch_add(1) == 0) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace mvdet
