#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rosenhain {

// Worker count. ROSENHAIN_THREADS caps the hardware default.
inline unsigned thread_budget()
{
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) {
        hw = 1;
    }
    if (const char* s = std::getenv("ROSENHAIN_THREADS")) {
        const long v = std::strtol(s, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) {
            hw = static_cast<unsigned>(v);
        }
    }
    return hw;
}

// Runs body(i) for i in [0, n). Each index writes only its own output slot,
// so results do not depend on the thread count.
template <typename F>
void parallel_for(std::size_t n, F&& body)
{
    unsigned nt = thread_budget();
    if (nt > n) {
        nt = static_cast<unsigned>(n);
    }
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += nt) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) {
                    err = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (err) {
        std::rethrow_exception(err);
    }
}

} // namespace rosenhain
