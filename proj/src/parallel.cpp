#include "o2i/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace o2i {

unsigned resolve_thread_count(unsigned requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("O2I_THREADS"); env != nullptr) {
        unsigned value = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc() && ptr == end && value != 0) return value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace o2i
