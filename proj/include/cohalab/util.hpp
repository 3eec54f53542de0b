#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cohalab {

/// Worker cap: COHA_LAB_THREADS if set (>= 1), else hardware concurrency.
inline int max_threads() {
    if (const char* env = std::getenv("COHA_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Evaluate fn(i) for i in [0, n) on up to max_threads() workers and combine
/// with `merge` in index order, so results are identical to a serial run.
template <typename Result, typename Fn, typename Merge>
Result parallel_index_reduce(long n, Result init, Fn fn, Merge merge) {
    int nt = std::min<long>(max_threads(), n);
    if (nt <= 1) {
        Result acc = std::move(init);
        for (long i = 0; i < n; ++i) acc = merge(std::move(acc), fn(i));
        return acc;
    }
    std::vector<Result> partial(nt, init);
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (int w = 0; w < nt; ++w) {
        workers.emplace_back([&, w]() {
            Result acc = init;
            for (long i = w; i < n; i += nt) acc = merge(std::move(acc), fn(i));
            partial[w] = std::move(acc);
        });
    }
    for (auto& t : workers) t.join();
    Result acc = std::move(init);
    for (int w = 0; w < nt; ++w) acc = merge(std::move(acc), std::move(partial[w]));
    return acc;
}

} // namespace cohalab
