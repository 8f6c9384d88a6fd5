#pragma once

#include <functional>
#include <vector>

namespace qact::bench {

// Worker count: QUANT_ACTUARY_THREADS when set, else hardware concurrency.
int worker_count();

// Runs fn(0..count-1) on a small worker pool and returns results in index
// order. Tasks must be pure given their index (all seeds derived from it),
// which keeps every output byte-identical regardless of the pool size.
template <typename R>
std::vector<R> parallel_map(int count, const std::function<R(int)>& fn);

namespace detail {
void parallel_for(int count, const std::function<void(int)>& fn);
}

template <typename R>
std::vector<R> parallel_map(int count, const std::function<R(int)>& fn) {
    std::vector<R> results(static_cast<std::size_t>(count));
    detail::parallel_for(count, [&](int i) { results[static_cast<std::size_t>(i)] = fn(i); });
    return results;
}

}  // namespace qact::bench
