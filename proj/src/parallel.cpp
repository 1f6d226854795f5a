#include "hawkes/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hawkes/errors.hpp"

namespace hawkes {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HAWKES_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value <= 0) {
            throw ConfigError("HAWKES_THREADS must be a positive integer, got '" +
                              std::string(env) + "'");
        }
        return static_cast<int>(value);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_reps(std::uint64_t reps, int threads,
                       const std::function<void(std::uint64_t)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || reps <= 1) {
        for (std::uint64_t r = 0; r < reps; ++r) fn(r);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const std::uint64_t workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), reps);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!stop.load(std::memory_order_relaxed)) {
                const std::uint64_t r = next.fetch_add(1, std::memory_order_relaxed);
                if (r >= reps) break;
                try {
                    fn(r);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    stop.store(true, std::memory_order_relaxed);
                    break;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace hawkes
