#include "frdvasc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace frd {

int thread_cap() {
    static const int cap = [] {
        const char* env = std::getenv("FRDVASC_THREADS");
        if (!env) return 1;
        const int v = std::atoi(env);
        if (v < 1) return 1;
        const int hw = static_cast<int>(std::thread::hardware_concurrency());
        return std::min(v, std::max(hw, 1));
    }();
    return cap;
}

void parallel_for(int count, const std::function<void(int, int)>& fn) {
    const int width = std::min(thread_cap(), count);
    if (width <= 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(width);
    const int chunk = (count + width - 1) / width;
    for (int w = 0; w < width; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace frd
