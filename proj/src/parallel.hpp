#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace catpoly::detail {

// Apply fn to 0..count-1, filling a result slot per index. Results are
// positional, so worker count affects wall time only, never output bytes.
template <class Result, class Fn>
std::vector<Result> parallel_map(size_t count, int jobs, Fn fn) {
    std::vector<Result> results(count);
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                cursor.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(static_cast<size_t>(spawn));
    for (int j = 0; j < spawn; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace catpoly::detail
