#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace artin {

/// Worker count: explicit value, else ARTIN_RANDLAB_THREADS, else hardware.
inline unsigned resolve_threads(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ARTIN_RANDLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(worker, lo, hi) over a contiguous partition of [0, total).
/// Workers receive disjoint ranges; the caller owns any reduction. The first
/// exception thrown by a worker is rethrown after all workers joined.
inline void parallel_ranges(std::uint64_t total, unsigned threads,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (threads <= 1 || total < 2) {
        fn(0, 0, total);
        return;
    }
    if (threads > total) threads = static_cast<unsigned>(total);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::vector<std::exception_ptr> errors(threads);
    const std::uint64_t chunk = total / threads;
    const std::uint64_t rem = total % threads;
    std::uint64_t lo = 0;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        pool.emplace_back([&, w, lo, hi] {
            try {
                fn(w, lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace artin
