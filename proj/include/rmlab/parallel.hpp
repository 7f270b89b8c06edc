#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rmlab {

/// Splits [0, total) into `jobs` contiguous chunks and runs fn(chunk, begin, end) on each,
/// one thread per chunk. Chunk boundaries depend only on (total, jobs); callers reduce the
/// per-chunk results in chunk order so output never depends on scheduling.
template <class Fn>
void parallel_chunks(std::size_t total, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < 2) {
        fn(std::size_t{0}, std::size_t{0}, total);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(jobs, total);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = total * c / chunks;
        const std::size_t end = total * (c + 1) / chunks;
        workers.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// Number of chunks parallel_chunks will use; size per-chunk accumulators with this.
inline std::size_t chunk_count(std::size_t total, unsigned jobs) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < 2) return 1;
    return std::min<std::size_t>(jobs, total);
}

}  // namespace rmlab
