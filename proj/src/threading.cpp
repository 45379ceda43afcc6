#include "mvdet/threading.hpp"

#include <cstdlib>

namespace mvdet {

int worker_count() {
    if (const char* env = std::getenv("MVDET_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace mvdet
