// Overflow-checked 64-bit integer arithmetic. Winding numbers are
// arbitrary-precision in meaning; this representation keeps the exhaustive
// scans fast while turning every overflow into a reported error instead of
// silent wraparound.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ttc/errors.hpp"

namespace ttc {

using Int = std::int64_t;

namespace detail {

[[noreturn]] inline void overflow(const char* op, Int a, Int b) {
    throw OverflowError(std::string("int64 overflow in ") + op + "(" +
                        std::to_string(a) + ", " + std::to_string(b) + ")");
}

} // namespace detail

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) detail::overflow("add", a, b);
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) detail::overflow("sub", a, b);
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) detail::overflow("mul", a, b);
    return r;
}

inline Int checked_neg(Int a) {
    return checked_sub(0, a);
}

inline Int checked_abs(Int a) {
    return a < 0 ? checked_neg(a) : a;
}

// gcd on absolute values, with gcd(0,n) = |n|. checked_abs rejects INT64_MIN
// first, so std::gcd never sees an unrepresentable magnitude.
inline Int gcd_abs(Int a, Int b) {
    return std::gcd(checked_abs(a), checked_abs(b));
}

} // namespace ttc
