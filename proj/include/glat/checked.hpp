#pragma once

#include <cstdint>
#include <string>

#include "glat/error.hpp"

namespace glat::checked {

using i64 = std::int64_t;

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer addition");
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer subtraction");
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer multiplication");
    return r;
}

inline i64 pow(i64 base, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, base);
    return r;
}

// Representative in [0, m).
inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
    return i64((__int128(mod(a, m)) * mod(b, m)) % m);
}

inline i64 floordiv(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// p-adic valuation; zero has infinite valuation, reported as a large sentinel.
constexpr int kInfValuation = 1 << 20;

inline int valuation(i64 a, i64 p) {
    if (a == 0) return kInfValuation;
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

inline i64 strip(i64 a, i64 p) {
    if (a == 0) return 0;
    while (a % p == 0) a /= p;
    return a;
}

inline i64 gcd(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Inverse of a unit modulo m (gcd(a, m) = 1).
inline i64 inverse(i64 a, i64 m) {
    if (m == 1) return 0;
    __int128 t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw BadInput("value is not a unit");
    if (t < 0) t += m;
    return i64(t);
}

}  // namespace glat::checked
