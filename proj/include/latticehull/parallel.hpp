#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lh {

/// Worker count to use when the caller does not care: the hardware value,
/// at least 1.
inline int default_thread_count() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

/// Run fn(i) for i in [0, n) on up to `threads` workers. Work is handed out
/// by atomic chunks; the callable must only write to state owned by index i,
/// which keeps results identical for every worker count.
inline void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    threads = std::max(1, threads);
    if (threads == 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::int64_t chunk = std::max<std::int64_t>(1, n / (8 * threads));
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::int64_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            const std::int64_t end = std::min(n, begin + chunk);
            try {
                for (std::int64_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads) - 1);
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace lh
