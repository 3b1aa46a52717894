#pragma once

// Exact wide-integer helpers for the counting operations; q^(2n-1) and ball
// sizes exceed 64 bits well inside the supported parameter range.

#include <cmath>
#include <cstdint>
#include <string>

#include "galois.hpp"

namespace dtc {

using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), char('0' + unsigned(v % 10)));
        v /= 10;
    }
    return s;
}

inline double u128_to_double(u128 v) {
    return std::ldexp(double(std::uint64_t(v >> 64)), 64) + double(std::uint64_t(v));
}

/// base^exp with overflow detection.
inline u128 checked_pow(u128 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > ~u128(0) / base) throw error("integer overflow in checked_pow");
        r *= base;
    }
    return r;
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > ~u128(0) / a) throw error("integer overflow in checked_mul");
    return a * b;
}

inline u128 checked_add(u128 a, u128 b) {
    if (b > ~u128(0) - a) throw error("integer overflow in checked_add");
    return a + b;
}

} // namespace dtc
