#pragma once

#include "random.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace interlim {

// Thread count: explicit value if nonzero, else INTERLIM_THREADS, else hardware.
inline unsigned resolve_threads(unsigned requested = 0) {
    if (requested) return requested;
    if (const char* env = std::getenv("INTERLIM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(rep, rng) for rep in [0, reps), where rng is the rep-th stream
// derived from master. Results depend only on (master, rep), never on the
// thread count or scheduling.
template <class Fn>
void for_each_rep(std::size_t reps, std::uint64_t master, unsigned threads, Fn&& fn) {
    threads = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(reps, 1));
    if (threads <= 1) {
        for (std::size_t r = 0; r < reps; ++r) {
            Rng rng(derive_seed(master, r));
            fn(r, rng);
        }
        return;
    }
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t r = t; r < reps; r += threads) {
                    Rng rng(derive_seed(master, r));
                    fn(r, rng);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace interlim
