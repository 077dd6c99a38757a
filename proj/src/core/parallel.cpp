#include "meshkit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace meshkit {

static std::atomic<unsigned> g_default_threads{0};

void set_default_threads(unsigned threads) {
    g_default_threads.store(threads);
}

unsigned default_threads() {
    unsigned t = g_default_threads.load();
    if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
    return t;
}

void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn, unsigned threads) {
    if (n == 0) return;
    unsigned t = threads ? threads : default_threads();
    t = unsigned(std::min<size_t>(t, n));
    if (t <= 1) {
        fn(0, n);
        return;
    }
    size_t chunk = (n + t - 1) / t;
    std::vector<std::thread> workers;
    workers.reserve(t);
    std::exception_ptr error;
    std::atomic_flag error_set = ATOMIC_FLAG_INIT;
    for (unsigned w = 0; w < t; ++w) {
        size_t lo = size_t(w) * chunk;
        size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                if (!error_set.test_and_set()) error = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace meshkit
