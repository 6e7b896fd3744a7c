#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dqpt {

// Worker count: DQPT_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Runs body(i) for i in [0, n) on up to `workers` threads. Indices are
// handed out in contiguous blocks; each index is visited exactly once.
// The first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t workers = worker_count());

// Ordered map: out[i] = fn(i). Result order is independent of scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn, std::size_t workers = worker_count()) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = fn(i); }, workers);
    return out;
}

} // namespace dqpt
