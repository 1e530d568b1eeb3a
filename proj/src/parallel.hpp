#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace hilbert::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [begin, end) into contiguous shards, runs fn(lo, hi) on each and
/// returns the per-shard results in shard order.
template <class Result, class Fn>
std::vector<Result> parallel_map_ranges(std::uint64_t begin, std::uint64_t end, unsigned threads, Fn&& fn) {
    const std::uint64_t count = end > begin ? end - begin : 0;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(count, 1)));
    std::vector<Result> results(workers);
    if (workers == 1) {
        results[0] = fn(begin, end);
        return results;
    }
    const std::uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min(end, begin + w * chunk);
        const std::uint64_t hi = std::min(end, lo + chunk);
        pool.emplace_back([&results, &fn, w, lo, hi] { results[w] = fn(lo, hi); });
    }
    pool.clear();
    return results;
}

} // namespace hilbert::detail
