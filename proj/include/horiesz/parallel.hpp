#pragma once
// Static-partition parallel loop. Each index is handled by exactly one
// worker and writes only its own slot, so results do not depend on the
// thread count.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace horiesz {

/// Worker count: HORIESZ_THREADS if set and positive, else hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("HORIESZ_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

template <typename Fn>
void parallel_for(long begin, long end, Fn&& fn) {
    if (end <= begin) return;
    const long n = end - begin;
    const unsigned t = static_cast<unsigned>(std::min<long>(thread_count(), n));
    if (t <= 1) {
        for (long i = begin; i < end; ++i) fn(i);
        return;
    }
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (long i = begin + w; i < end; i += t) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace horiesz
