#pragma once

#include <cstdint>
#include <string>

#include "cubefree/errors.hpp"

namespace cubefree {

using i64  = std::int64_t;
using u64  = std::uint64_t;
using u32  = std::uint32_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string(i128 v);
std::string to_string(u128 v);

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowRisk("128-bit addition overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowRisk("128-bit multiplication overflow");
    return r;
}

inline u128 abs_u128(i128 v) { return v < 0 ? -(u128)v : (u128)v; }

inline double to_double(i128 v) {
    bool neg = v < 0;
    u128 a   = abs_u128(v);
    double d = (double)(u64)(a >> 64) * 18446744073709551616.0 + (double)(u64)a;
    return neg ? -d : d;
}

// floor(sqrt(n)), exact
u64 isqrt(u128 n);

inline bool is_perfect_square(u128 n, u64* root = nullptr) {
    u64 r = isqrt(n);
    if ((u128)r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// floor(cbrt(n)), exact
u64 icbrt(u128 n);

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 base, u64 exp, u64 m);

}  // namespace cubefree
