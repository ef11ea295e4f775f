#pragma once

#include "partalg/errors.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

namespace partalg::oracle {

/// Size limits for the brute-force engine. Exceeding one raises CapExceeded.
struct Caps {
    /// (k+l)^n, the dimension of T^n(V).
    std::uint64_t ambient_dim = 4096;
    /// n! for group-algebra sums and d! for multilinear polynomials.
    std::uint64_t group_order = 5040;
    /// Degree limit for the exhaustive E⊗E identity test.
    int ee_degree = 7;
    /// Degree limit for the E⊗E kernel dimension.
    int ee_kernel_degree = 6;
};

/// Process-wide caps. PARTALG_AMBIENT_CAP overrides the ambient dimension limit.
inline Caps& caps() {
    static Caps c = [] {
        Caps init;
        if (const char* env = std::getenv("PARTALG_AMBIENT_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) init.ambient_dim = v;
        }
        return init;
    }();
    return c;
}

inline std::uint64_t checked_ambient_dim(int alphabet, int degree) {
    std::uint64_t dim = 1;
    for (int i = 0; i < degree; ++i) {
        dim *= static_cast<std::uint64_t>(alphabet);
        if (dim > caps().ambient_dim)
            throw CapExceeded("ambient dimension " + std::to_string(alphabet) + "^" + std::to_string(degree) +
                              " exceeds cap " + std::to_string(caps().ambient_dim));
    }
    return dim;
}

inline void check_group_order(int n) {
    std::uint64_t order = 1;
    for (int i = 2; i <= n; ++i) {
        order *= static_cast<std::uint64_t>(i);
        if (order > caps().group_order)
            throw CapExceeded("group order " + std::to_string(n) + "! exceeds cap " +
                              std::to_string(caps().group_order));
    }
}

} // namespace partalg::oracle
