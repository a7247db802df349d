#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ctn {

/// Worker count used by the parallel sweeps. Defaults to CTN_THREADS if set,
/// otherwise the hardware concurrency.
int thread_count();
void set_thread_count(int threads);
int default_thread_count();

/**
 * Runs body(worker, begin, end) over [0, count) split into contiguous blocks,
 * one per worker. Callers reduce per-worker results in worker order, so the
 * outcome does not depend on scheduling.
 */
template <typename Body>
void parallel_blocks(std::size_t count, int workers, Body&& body)
{
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        body(0, std::size_t{0}, count);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    }
}

} // namespace ctn
