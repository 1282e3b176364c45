#include "epsnet/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace epsnet {

unsigned worker_count() {
    if (const char* env = std::getenv("EPSNET_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_for(std::size_t shards, const std::function<void(std::size_t)>& fn, unsigned workers) {
    if (workers == 0) workers = worker_count();
    if (workers <= 1 || shards <= 1) {
        for (std::size_t s = 0; s < shards; ++s) fn(s);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers && w < shards; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t s = next.fetch_add(1);
                if (s >= shards || failed.load()) return;
                try {
                    fn(s);
                } catch (...) {
                    if (!failed.exchange(true)) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace epsnet
