#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace o2i {

// Worker count for the Monte Carlo / grid oracles. A nonzero request wins;
// otherwise O2I_THREADS (0 or unset = auto) and finally hardware_concurrency.
unsigned resolve_thread_count(unsigned requested = 0);

// Calls body(begin, end) over contiguous chunks of [0, count) on up to
// `threads` workers. The body must only write to disjoint per-index state.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned threads, Body&& body) {
    const std::size_t workers =
        std::clamp<std::size_t>(threads == 0 ? 1 : threads, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        body(std::size_t{0}, count);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
}

} // namespace o2i
