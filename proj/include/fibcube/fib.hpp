#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibcube {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Every counting formula in the library goes through these helpers, so
// overflow surfaces as std::overflow_error instead of silent wraparound.
template <typename U>
inline U checked_add(U a, U b) {
    U r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("unsigned addition overflow");
    return r;
}

template <typename U>
inline U checked_mul(U a, U b) {
    U r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("unsigned multiplication overflow");
    return r;
}

template <typename U>
inline U checked_sub(U a, U b) {
    if (b > a)
        throw std::overflow_error("unsigned subtraction underflow");
    return a - b;
}

inline u64 checked_pow2(std::uint32_t k) {
    if (k >= 64)
        throw std::overflow_error("2^" + std::to_string(k) + " exceeds 64 bits");
    return u64{1} << k;
}

inline u128 checked_pow2_wide(std::uint32_t k) {
    if (k >= 128)
        throw std::overflow_error("2^" + std::to_string(k) + " exceeds 128 bits");
    return u128{1} << k;
}

// F_0 = 0, F_1 = 1, F_k = F_{k-1} + F_{k-2}.
// F_93 is the largest Fibonacci number that fits in 64 bits.
inline u64 fibonacci(std::uint32_t k) {
    if (k == 0)
        return 0;
    u64 a = 0, b = 1;
    for (std::uint32_t i = 1; i < k; ++i) {
        u64 next = checked_add(a, b);
        a = b;
        b = next;
    }
    return b;
}

inline u128 fibonacci_wide(std::uint32_t k) {
    if (k == 0)
        return 0;
    u128 a = 0, b = 1;
    for (std::uint32_t i = 1; i < k; ++i) {
        u128 next = checked_add(a, b);
        a = b;
        b = next;
    }
    return b;
}

inline std::string to_string(u128 v) {
    if (v == 0)
        return "0";
    std::string out;
    while (v > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return out;
}

// Narrowing with an explicit error beats an implicit truncation.
inline u64 narrow_to_u64(u128 v) {
    if (v > u128{~u64{0}})
        throw std::overflow_error("value " + to_string(v) + " exceeds 64 bits");
    return static_cast<u64>(v);
}

}  // namespace fibcube
