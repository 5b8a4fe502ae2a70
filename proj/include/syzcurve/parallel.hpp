#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace syzcurve {

inline std::atomic<unsigned>& job_limit() {
    static std::atomic<unsigned> n{0}; // 0 = hardware default
    return n;
}

inline void set_job_limit(unsigned n) { job_limit().store(n); }

inline unsigned effective_jobs(long work_items) {
    unsigned n = job_limit().load();
    if (n == 0) n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (work_items < static_cast<long>(n)) n = static_cast<unsigned>(work_items < 1 ? 1 : work_items);
    return n;
}

// Run fn(i) for i in [0, n) on a fixed-size worker pool.  Results must be
// written to preallocated, index-owned slots so the outcome is independent of
// scheduling.  The first exception is rethrown on the calling thread.
template <class F>
void parallel_for(long n, F&& fn) {
    if (n <= 0) return;
    const unsigned jobs = effective_jobs(n);
    if (jobs <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load() && err) std::rethrow_exception(err);
}

} // namespace syzcurve
