#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace sympow {

/// Runs fn(0..count-1) over at most `jobs` threads with static chunking.
/// Results must be written to disjoint, index-addressed slots so serial and
/// parallel runs are indistinguishable.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace sympow
