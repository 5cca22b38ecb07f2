#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edslrs {

/// Runs body(worker, i) for i in [0, n), worker t taking i = t, t + jobs, ...; the first
/// exception thrown by any worker is rethrown after all workers have joined.
template <class Body>
void parallel_strided(unsigned jobs, std::size_t n, Body&& body) {
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) body(0u, i);
        return;
    }
    std::exception_ptr first;
    std::mutex m;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += jobs) body(t, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!first) first = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
}

}  // namespace edslrs
