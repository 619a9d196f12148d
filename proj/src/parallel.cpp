#include "cantorgauge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace cantorgauge {

namespace {
std::atomic<int> g_max_threads{1};
}

void set_max_threads(int threads) {
    g_max_threads.store(std::max(1, threads));
}

int max_threads() {
    return g_max_threads.load();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    const int workers = std::min<int>(g_max_threads.load(), static_cast<int>(n));
    if (workers <= 1 || n < 256) {
        fn(0, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        const std::size_t begin = static_cast<std::size_t>(t) * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cantorgauge
