#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace collapsim {

// Worker count from COLLAPSIM_THREADS (unset, 0 or unparsable means one
// worker per hardware thread).
unsigned worker_count();

// Evaluates fn(i) for i in [0, n) across worker_count() threads and returns
// the results in index order. fn must be safe to call concurrently and must
// depend only on i for the output to be independent of the thread count.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t n, Fn&& fn)
{
    std::vector<Result> results(n);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1)));
    constexpr std::size_t chunk = 64;

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(chunk);
                if (begin >= n)
                    return;
                const std::size_t end = std::min(n, begin + chunk);
                for (std::size_t i = begin; i < end; ++i)
                    results[i] = fn(i);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next.store(n);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace collapsim
