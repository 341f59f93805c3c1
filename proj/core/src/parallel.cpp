#include "pseudogas/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace pseudogas {

unsigned default_worker_count() {
    if (const char* env = std::getenv("PSEUDOGAS_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
            // ignore malformed hint
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t units, unsigned workers,
                  const std::function<void(std::size_t)>& body) {
    if (units == 0) return;
    if (workers == 0) workers = default_worker_count();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, units));
    if (workers <= 1) {
        for (std::size_t i = 0; i < units; ++i) body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < units; i = next.fetch_add(1)) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next.store(units);
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace pseudogas
