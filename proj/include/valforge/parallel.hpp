#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace valforge {

// worker cap: VALFORGE_THREADS if set, else hardware concurrency
inline unsigned worker_count() {
    if (const char* s = std::getenv("VALFORGE_THREADS")) {
        long n = std::strtol(s, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(std::min(n, 256L));
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// static block partition of [0, n); f(worker_slot, begin, end); results must be
// merged by the caller in slot order so output stays schedule-independent
inline void parallel_ranges(std::int64_t n, unsigned workers,
                            const std::function<void(unsigned, std::int64_t, std::int64_t)>& f) {
    if (workers <= 1 || n < 4096) {
        f(0, 0, n);
        return;
    }
    std::int64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> ts;
    unsigned slot = 0;
    for (std::int64_t b = 0; b < n; b += chunk, ++slot)
        ts.emplace_back(f, slot, b, std::min<std::int64_t>(n, b + chunk));
    for (auto& t : ts) t.join();
}

}  // namespace valforge
