#pragma once

#include <cstdint>

#include "ellsurf/errors.hpp"

namespace ellsurf::fp {

using u64 = std::uint64_t;
using u128 = __uint128_t;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw DivisionByZero("inverse of 0 mod p");
    return powmod(a % p, p - 2, p);
}

/// Legendre symbol by Euler's criterion; 0 on multiples of p. Requires odd p.
inline int legendre(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    u64 r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

/// Square root mod an odd prime via Tonelli-Shanks. Input must be a
/// quadratic residue; the smaller of the two roots is returned.
inline u64 sqrtmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) {
        u64 r = powmod(a, (p + 1) / 4, p);
        return r <= p - r ? r : p - r;
    }
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (legendre(z, p) != -1) ++z;
    u64 m = static_cast<u64>(s);
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r <= p - r ? r : p - r;
}

}  // namespace ellsurf::fp
