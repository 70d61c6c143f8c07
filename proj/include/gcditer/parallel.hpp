#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gcditer {

/// Runs fn(k) for every k in [lo, hi] on `workers` threads. Each call owns
/// its k, so callers write into per-k slots and merged output is identical
/// for any worker count. The first exception thrown is rethrown here.
template <class Fn>
void parallel_for_k(long lo, long hi, int workers, Fn&& fn) {
    if (hi < lo) return;
    if (workers <= 1) {
        for (long k = lo; k <= hi; ++k) fn(k);
        return;
    }
    std::atomic<long> next(lo);
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto body = [&] {
        while (true) {
            long k = next.fetch_add(1);
            if (k > hi) return;
            try {
                fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gcditer
