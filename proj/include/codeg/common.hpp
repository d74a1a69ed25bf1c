#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace codeg {

// Brute-force paths (enumeration, conjugacy classes, character tables) refuse
// groups larger than this unless the caller raises the guard explicitly.
inline constexpr std::int64_t kDefaultOrderGuard = 20000;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent power-commutator presentation.
struct presentation_error : error {
    using error::error;
};

// Requested brute-force computation exceeds the configured order guard.
struct guard_error : error {
    using error::error;
};

// Invalid user input (unknown group spec, bad prime, bad file, ...).
struct input_error : error {
    using error::error;
};

inline bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

inline bool is_odd_prime(std::int64_t p) { return p > 2 && is_prime(p); }

// x^k for small integer bases; overflow is the caller's problem (orders here
// stay far below 2^63).
inline std::int64_t ipow(std::int64_t x, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// log_p(m) for exact p-powers; -1 if m is not a power of p.
inline int plog(std::int64_t p, std::int64_t m) {
    int k = 0;
    while (m > 1) {
        if (m % p != 0) return -1;
        m /= p;
        ++k;
    }
    return m == 1 ? k : -1;
}

}  // namespace codeg
