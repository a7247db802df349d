#include "ctn/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace ctn {

namespace {
std::atomic<int> g_threads{0};
}

int default_thread_count()
{
    if (const char* env = std::getenv("CTN_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0)
                return v;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int thread_count()
{
    const int t = g_threads.load();
    return t > 0 ? t : default_thread_count();
}

void set_thread_count(int threads) { g_threads.store(threads > 0 ? threads : 0); }

} // namespace ctn
