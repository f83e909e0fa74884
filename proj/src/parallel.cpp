#include "isoext/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace isoext {

int resolve_thread_count(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("ISOEXT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn)
{
    if (n <= 0)
        return;
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mtx;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= n)
                    return;
                try {
                    fn(i);
                }
                catch (...) {
                    std::lock_guard lock(error_mtx);
                    if (!error)
                        error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace isoext
