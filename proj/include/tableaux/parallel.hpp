#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace tableaux {

/// Applies fn to every item and returns the results in input order. Work is
/// distributed over `jobs` threads via an atomic cursor; each result lands in
/// its own slot, so the output is deterministic regardless of scheduling.
/// jobs <= 1 runs inline. The first exception (by item index) is rethrown.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn&& fn, int jobs)
    -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    if (jobs <= 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }

    const int workers = std::min<int>(jobs, static_cast<int>(items.size()));
    std::atomic<size_t> cursor{0};
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<bool> failed{false};

    auto work = [&] {
        while (true) {
            const size_t i = cursor.fetch_add(1);
            if (i >= items.size()) return;
            if (failed.load(std::memory_order_relaxed)) return;
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace tableaux
