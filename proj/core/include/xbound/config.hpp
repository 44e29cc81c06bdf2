#pragma once

#include <cstdlib>
#include <string>

#include "xbound/errors.hpp"

namespace xbound {

/// Effective size guard: the compiled default, raised to XBOUND_MAX_N when
/// that environment variable is set and larger.
inline int size_guard(int default_limit) {
    if (const char* env = std::getenv("XBOUND_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > default_limit) return static_cast<int>(v);
    }
    return default_limit;
}

inline void check_size_guard(int n, int default_limit, const char* operation) {
    int limit = size_guard(default_limit);
    if (n > limit) {
        throw SizeGuardError(std::string(operation) + ": size " + std::to_string(n) +
                             " exceeds guard " + std::to_string(limit) +
                             " (set XBOUND_MAX_N to raise)");
    }
}

}  // namespace xbound
