#pragma once

#include <cstdint>

namespace edslrs::mod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

inline u64 sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 neg(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

inline u64 mul(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul(r, base, m);
        base = mul(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Inverse modulo m, or 0 when gcd(a, m) != 1.
inline u64 inv(u64 a, u64 m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return 0;
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<u64>(t);
}

/// Reduce a signed value into [0, m).
inline u64 from_signed(std::int64_t v, u64 m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

}  // namespace edslrs::mod
