#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace strata::detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Applies fn(i) for i in [0, count). Workers pull contiguous chunks off a
// shared counter; callers must write results into per-index slots so the
// schedule cannot affect the output.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    const int workers =
        std::min<int>(resolve_jobs(jobs), static_cast<int>(std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    const std::size_t chunk =
        std::max<std::size_t>(1, count / (static_cast<std::size_t>(workers) * 8));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::size_t begin = next.fetch_add(chunk);
                    if (begin >= count) return;
                    const std::size_t end = std::min(begin + chunk, count);
                    for (std::size_t i = begin; i < end; ++i) fn(i);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace strata::detail
