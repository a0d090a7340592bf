#include "kp2/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace kp2 {

namespace {

std::size_t worker_count(std::size_t n) {
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    // KP2_THREADS caps the pool (results are identical either way; the
    // override exists so tests can pin and compare thread counts).
    if (const char* env = std::getenv("KP2_THREADS"); env && *env) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = static_cast<std::size_t>(v);
    }
    return std::min(n, hw);
}

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace kp2
