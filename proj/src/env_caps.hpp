#pragma once

#include <cstdlib>

namespace catpoly::detail {

// Enumeration caps are environment-overridable; malformed values fall back.
inline int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || *end || parsed < 1 || parsed > 1000000) return fallback;
    return static_cast<int>(parsed);
}

}  // namespace catpoly::detail
