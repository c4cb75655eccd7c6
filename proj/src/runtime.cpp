#include "ears/runtime.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ears {

namespace {
std::atomic<size_t> g_thread_cap{1};
}

size_t thread_cap() { return g_thread_cap.load(); }

void set_thread_cap(size_t n) { g_thread_cap.store(std::max<size_t>(1, n)); }

void run_chunked(size_t n, const std::function<void(size_t, size_t, size_t)>& body) {
    const size_t workers = std::min(thread_cap(), std::max<size_t>(1, n));
    if (workers <= 1 || n == 0) {
        body(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    const size_t chunk = (n + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        size_t begin = w * chunk, end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace ears
