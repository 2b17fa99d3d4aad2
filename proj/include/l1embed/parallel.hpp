#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace l1embed {

// Runs body(i) for i in [0, count) on up to `threads` workers with a static
// block split. Callers store results by index, so any reduction over them is
// independent of the execution order and a parallel run reproduces the
// sequential one bit for bit. The first exception wins and is rethrown.
template <class Body>
void parallel_for_index(int count, int threads, Body&& body) {
    if (count <= 0) return;
    if (threads <= 1 || count == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    const int workers = std::min(threads, count);
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace l1embed
