#ifndef BIANCHI_PARALLEL_HPP
#define BIANCHI_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bianchi {

// BIANCHI_THREADS caps the pool; defaults to the hardware concurrency
inline unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BIANCHI_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
        } catch (const std::exception&) {
        }
    }
    return n;
}

// results[i] = fn(items[i]), evaluated on a bounded pool; order follows items
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned threads = worker_count())
{
    using R = decltype(fn(items.front()));
    std::vector<R> results(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            try {
                results[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return results;
}

}

#endif
