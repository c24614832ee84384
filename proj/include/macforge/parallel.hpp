#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace macforge {

/// Worker count: MACFORGE_THREADS if set (minimum 1), else hardware
/// concurrency, clamped to the number of jobs.
inline std::size_t worker_count(std::size_t jobs) {
    std::size_t n = 0;
    if (const char* env = std::getenv("MACFORGE_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) n = static_cast<std::size_t>(parsed);
    }
    if (n == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        n = hw == 0 ? 1 : hw;
    }
    return std::max<std::size_t>(1, std::min(n, std::max<std::size_t>(jobs, 1)));
}

/// Runs f(i) for i in [0, jobs) across worker threads.  Callers write results
/// into preallocated slots indexed by i, so output order never depends on
/// scheduling.  The first exception thrown by any job is rethrown.
template <class F>
void parallel_for(std::size_t jobs, F&& f) {
    const std::size_t workers = worker_count(jobs);
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs || failed.load()) return;
                try {
                    f(i);
                } catch (...) {
                    if (!failed.exchange(true)) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace macforge
