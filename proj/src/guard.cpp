#include "glat/guard.hpp"

#include <atomic>
#include <cstdlib>

namespace glat {

namespace {
std::atomic<std::size_t> g_limit{0};
}

std::size_t max_enum() {
    if (std::size_t v = g_limit.load()) return v;
    if (const char* env = std::getenv("GLAT_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return std::size_t(v);
    }
    return 200000;
}

void set_max_enum(std::size_t limit) { g_limit = limit; }

}  // namespace glat
