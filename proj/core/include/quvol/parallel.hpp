#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace quvol {

/// Runs fn(begin, end) over contiguous chunks of [0, n) on `workers`
/// threads.  Work is written to disjoint, pre-sized buffers by index, so
/// the chunking affects scheduling only — results are identical for any
/// worker count.  The first exception thrown by any chunk is rethrown on
/// the calling thread after all workers join.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    if (workers > n) {
        workers = n;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);

    const std::size_t chunk = n / workers;
    const std::size_t rem = n % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t end = begin + chunk + (w < rem ? 1 : 0);
        auto task = [&fn, &errors, w, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        if (w + 1 == workers) {
            task();
        } else {
            threads.emplace_back(task);
        }
        begin = end;
    }
    for (std::thread& t : threads) {
        t.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace quvol
