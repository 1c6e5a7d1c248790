#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace racah {

/// Number of workers to use: the explicit request, else RACAH_THREADS,
/// else the hardware count (at least 1).
int resolve_threads(int requested = 0);

/// Runs fn(i) for i in [0, count) across `threads` workers on contiguous
/// chunks. Each index writes only its own preallocated slot, so results are
/// bit-identical regardless of the worker count. The first exception thrown
/// by any worker is rethrown.
template <typename Fn>
void parallel_for(size_t count, int threads, Fn&& fn) {
    if (count == 0) return;
    size_t workers = threads < 1 ? 1 : static_cast<size_t>(threads);
    if (workers > count) workers = count;
    if (workers == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    size_t chunk = (count + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        size_t lo = w * chunk;
        size_t hi = lo + chunk < count ? lo + chunk : count;
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace racah
