#pragma once

#include <cstddef>
#include <thread>
#include <type_traits>
#include <vector>

namespace zetasum {

// Pairwise (tree) reduction of a vector of partial sums. Deterministic for a
// given input ordering.
template <class T>
T pairwise_reduce(std::vector<T> v) {
    if (v.empty()) return T{};
    std::size_t n = v.size();
    while (n > 1) {
        std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) v[i] += v[i + half];
        n = half;
    }
    return v[0];
}

namespace detail {
inline unsigned worker_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1u : hc;
}
} // namespace detail

// Runs f(i) for i in [0, count) across worker threads. Each index writes its
// own result slot, so the outcome is independent of scheduling.
template <class F>
void parallel_for_index(std::size_t count, F&& f) {
    unsigned workers = detail::worker_count();
    if (workers <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t per = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * per;
        std::size_t hi = lo + per < count ? lo + per : count;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Sum of term(i) over i in [0, count). Terms are accumulated sequentially
// within fixed-size chunks and chunk sums are combined by pairwise tree
// reduction, so the result is bit-identical for a fixed chunk size no matter
// how many threads run the chunks.
template <class F>
auto chunked_sum(std::size_t count, F&& term, std::size_t chunk = 1024)
    -> std::decay_t<decltype(term(std::size_t{0}))> {
    using T = std::decay_t<decltype(term(std::size_t{0}))>;
    if (count == 0) return T{};
    std::size_t nchunks = (count + chunk - 1) / chunk;
    std::vector<T> partial(nchunks, T{});
    auto run_chunk = [&](std::size_t c) {
        std::size_t lo = c * chunk;
        std::size_t hi = lo + chunk < count ? lo + chunk : count;
        T s{};
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    };
    parallel_for_index(nchunks, run_chunk);
    return pairwise_reduce(std::move(partial));
}

} // namespace zetasum
