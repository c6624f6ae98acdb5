#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ffvc {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Chunked reduction over [0, n). Each worker folds a contiguous chunk into
// a zero-initialized accumulator; chunk results are combined in chunk order,
// so integer sums are identical for every thread count.
template <typename Acc, typename Fold>
Acc parallel_reduce(uint64_t n, int threads, Fold fold) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        Acc acc{};
        for (uint64_t i = 0; i < n; ++i) fold(acc, i);
        return acc;
    }
    uint64_t nthreads = std::min<uint64_t>(threads, n);
    std::vector<Acc> partial(nthreads);
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    for (uint64_t w = 0; w < nthreads; ++w) {
        uint64_t lo = n * w / nthreads;
        uint64_t hi = n * (w + 1) / nthreads;
        workers.emplace_back([&, lo, hi, w] {
            try {
                Acc acc{};
                for (uint64_t i = lo; i < hi; ++i) fold(acc, i);
                partial[w] = std::move(acc);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Acc total{};
    for (auto& p : partial) total += p;
    return total;
}

} // namespace ffvc
