#pragma once

#include <stdexcept>

namespace raagtc {

// Exact 64-bit arithmetic: overflow throws instead of wrapping. Every
// quantity in the library is bounded by small multiples of r and the
// coefficient sizes, so 64 bits only overflow on adversarial inputs.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

} // namespace raagtc
