#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace liftinglab {

// Worker count: explicit override > LIFTINGLAB_JOBS env > hardware.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("LIFTINGLAB_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Splits [begin, end) into contiguous chunks, one per worker. Each worker
// gets (worker_index, chunk_begin, chunk_end). Results must be merged by the
// caller in worker order so totals stay deterministic.
inline void parallel_ranges(std::uint64_t begin, std::uint64_t end, unsigned jobs,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
    std::uint64_t total = end > begin ? end - begin : 0;
    if (jobs <= 1 || total < 2) {
        if (total) body(0, begin, end);
        return;
    }
    if (jobs > total) jobs = static_cast<unsigned>(total);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    std::uint64_t chunk = total / jobs, extra = total % jobs, at = begin;
    for (unsigned w = 0; w < jobs; ++w) {
        std::uint64_t len = chunk + (w < extra ? 1 : 0);
        std::uint64_t b = at, e = at + len;
        at = e;
        threads.emplace_back([w, b, e, &body] { body(w, b, e); });
    }
    for (auto& t : threads) t.join();
}

// Dynamic work stealing over an index range, for uneven per-item cost.
inline void parallel_for_each(std::uint64_t count, unsigned jobs,
                              const std::function<void(std::uint64_t)>& body) {
    if (jobs <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> threads;
    unsigned n = jobs > count ? static_cast<unsigned>(count) : jobs;
    threads.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
        threads.emplace_back([&] {
            for (;;) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= count) break;
                body(i);
            }
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace liftinglab
