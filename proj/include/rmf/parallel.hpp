#ifndef RMF_PARALLEL_HPP
#define RMF_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rmf {

// Runs fn(i) for i in [0, n) across `workers` threads.  Work items are
// claimed dynamically, so results must be written to per-index slots; the
// caller performs any reduction afterwards in index order, which keeps every
// outcome independent of the worker count and of scheduling.
template <typename Fn>
void parallel_for_index(std::uint64_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto body = [&]() {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n || failed.load(std::memory_order_relaxed)) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                break;
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n));
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace rmf

#endif
