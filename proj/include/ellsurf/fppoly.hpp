#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ellsurf/errors.hpp"
#include "ellsurf/fp.hpp"
#include "ellsurf/polynomial.hpp"

namespace ellsurf {

/// Dense polynomial over F_p for word-sized p. Lowest degree first, no
/// trailing zeros. This is the workhorse behind mod-p factorization, root
/// finding for the prime-sum engine, and the p-adic square root.
struct FpPoly {
    fp::u64 p = 0;
    std::vector<fp::u64> c;

    FpPoly() = default;
    FpPoly(fp::u64 prime, std::vector<fp::u64> coeffs) : p(prime), c(std::move(coeffs)) { trim(); }
    static FpPoly zero(fp::u64 p) { return FpPoly(p, {}); }
    static FpPoly constant(fp::u64 p, fp::u64 v) { return FpPoly(p, {v % p}); }
    static FpPoly x(fp::u64 p) { return FpPoly(p, {0, 1}); }

    void trim() {
        for (auto& v : c) v %= p;
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    fp::u64 operator[](int i) const {
        return (i < 0 || i >= static_cast<int>(c.size())) ? 0 : c[static_cast<std::size_t>(i)];
    }
    fp::u64 leading() const { return c.back(); }

    bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }

    fp::u64 eval(fp::u64 x) const {
        fp::u64 acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = fp::addmod(fp::mulmod(acc, x, p), c[i], p);
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
            if (i >= 1) {
                if (c[i] != 1) out += "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }
};

namespace fpp {

using fp::u64;

inline FpPoly add(const FpPoly& a, const FpPoly& b) {
    std::vector<u64> v(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] = fp::addmod(v[i], b.c[i], a.p ? a.p : b.p);
    return FpPoly(a.p ? a.p : b.p, std::move(v));
}

inline FpPoly sub(const FpPoly& a, const FpPoly& b) {
    u64 p = a.p ? a.p : b.p;
    std::vector<u64> v(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] = fp::submod(v[i], b.c[i], p);
    return FpPoly(p, std::move(v));
}

inline FpPoly mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p ? a.p : b.p);
    u64 p = a.p;
    std::vector<u64> v(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            v[i + j] = fp::addmod(v[i + j], fp::mulmod(a.c[i], b.c[j], p), p);
    }
    return FpPoly(p, std::move(v));
}

inline FpPoly scale(const FpPoly& a, u64 s) {
    FpPoly r = a;
    for (auto& v : r.c) v = fp::mulmod(v, s % a.p, a.p);
    r.trim();
    return r;
}

inline FpPoly monic(const FpPoly& a) {
    if (a.is_zero()) throw DegenerateInput("monic of zero polynomial mod p");
    return scale(a, fp::invmod(a.leading(), a.p));
}

inline std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& d) {
    if (d.is_zero()) throw DivisionByZero("mod-p division by zero polynomial");
    u64 p = d.p;
    FpPoly rem = a;
    if (rem.degree() < d.degree()) return {FpPoly::zero(p), rem};
    std::vector<u64> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, 0);
    u64 dinv = fp::invmod(d.leading(), p);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        u64 f = fp::mulmod(rem.leading(), dinv, p);
        q[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= d.degree(); ++i) {
            std::size_t idx = static_cast<std::size_t>(i + k);
            rem.c[idx] = fp::submod(rem.c[idx], fp::mulmod(f, d.c[static_cast<std::size_t>(i)], p), p);
        }
        rem.trim();
    }
    return {FpPoly(p, std::move(q)), rem};
}

inline FpPoly mod(const FpPoly& a, const FpPoly& d) { return divmod(a, d).second; }

inline FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f) { return mod(mul(a, b), f); }

inline FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return monic(a);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g the monic gcd.
inline std::tuple<FpPoly, FpPoly, FpPoly> ext_gcd(const FpPoly& a, const FpPoly& b) {
    u64 p = a.p ? a.p : b.p;
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly::zero(p);
    FpPoly t0 = FpPoly::zero(p), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = sub(t0, mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) throw DegenerateInput("ext_gcd(0, 0) mod p");
    u64 inv = fp::invmod(r0.leading(), p);
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

/// base^e mod f, with an arbitrary-precision exponent.
inline FpPoly powmod(FpPoly base, const mpz_class& e, const FpPoly& f) {
    FpPoly r = FpPoly::constant(f.p, 1);
    base = mod(base, f);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mulmod(r, base, f);
        base = mulmod(base, base, f);
        k >>= 1;
    }
    return r;
}

inline FpPoly derivative(const FpPoly& a) {
    if (a.c.size() <= 1) return FpPoly::zero(a.p);
    std::vector<u64> v(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) v[i - 1] = fp::mulmod(a.c[i], i % a.p, a.p);
    return FpPoly(a.p, std::move(v));
}

/// x^p mod f. Starting point for distinct-degree splitting and root counts.
inline FpPoly frobenius_x(const FpPoly& f) { return powmod(FpPoly::x(f.p), mpz_class(static_cast<unsigned long>(f.p)), f); }

/// Number of distinct roots of f in F_p (degree of gcd(x^p - x, f)).
inline int count_distinct_roots(const FpPoly& f) {
    if (f.degree() <= 0) return 0;
    FpPoly g = gcd(sub(frobenius_x(f), FpPoly::x(f.p)), f);
    return std::max(g.degree(), 0);
}

namespace detail {

/// Splits a product of distinct linear factors into its roots.
inline void collect_roots(const FpPoly& g, std::vector<u64>& out, u64& twist) {
    u64 p = g.p;
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(fp::mulmod(fp::submod(0, g.c[0], p), fp::invmod(g.c[1], p), p));
        return;
    }
    if (g.degree() == 2) {
        FpPoly m = monic(g);
        u64 b = m.c[1], c0 = m.c[0];
        u64 disc = fp::submod(fp::mulmod(b, b, p), fp::mulmod(4 % p, c0, p), p);
        u64 s = fp::sqrtmod(disc, p);
        u64 inv2 = fp::invmod(2 % p, p);
        out.push_back(fp::mulmod(fp::submod(s, b, p), inv2, p));
        out.push_back(fp::mulmod(fp::submod(fp::submod(0, s, p), b, p), inv2, p));
        return;
    }
    // Equal-degree splitting on linear factors: gcd((x+t)^((p-1)/2) - 1, g).
    for (;; ++twist) {
        FpPoly base(p, {twist % p, 1});
        FpPoly w = powmod(base, mpz_class(static_cast<unsigned long>((p - 1) / 2)), g);
        FpPoly h = gcd(sub(w, FpPoly::constant(p, 1)), g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            FpPoly other = divmod(g, h).first;
            ++twist;
            collect_roots(h, out, twist);
            collect_roots(other, out, twist);
            return;
        }
    }
}

}  // namespace detail

/// All distinct roots of f in F_p, ascending. f need not be squarefree.
inline std::vector<u64> roots(const FpPoly& f) {
    std::vector<u64> out;
    if (f.degree() <= 0) return out;
    if (f.p == 2) {
        if (f.eval(0) == 0) out.push_back(0);
        if (f.eval(1) == 0) out.push_back(1);
        return out;
    }
    FpPoly g = gcd(sub(frobenius_x(f), FpPoly::x(f.p)), f);
    u64 twist = 1;
    detail::collect_roots(g, out, twist);
    std::sort(out.begin(), out.end());
    return out;
}

/// Squarefree decomposition mod p, including the p-th power descent.
inline std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f0) {
    std::vector<std::pair<FpPoly, int>> out;
    u64 p = f0.p;
    struct Item {
        FpPoly f;
        int mult;
    };
    std::vector<Item> stack{{monic(f0), 1}};
    while (!stack.empty()) {
        auto [f, m] = stack.back();
        stack.pop_back();
        if (f.degree() <= 0) continue;
        FpPoly fp_ = derivative(f);
        if (fp_.is_zero()) {
            // f = g(x^p); over F_p this is g(x)^p.
            std::vector<u64> g((f.c.size() - 1) / p + 1);
            for (std::size_t i = 0; i < g.size(); ++i) g[i] = f.c[i * p];
            stack.push_back({FpPoly(p, std::move(g)), m * static_cast<int>(p)});
            continue;
        }
        FpPoly u = gcd(f, fp_);
        FpPoly v = divmod(f, u).first;  // product of distinct factors
        int k = 1;
        while (v.degree() > 0) {
            FpPoly w = gcd(u, v);
            FpPoly part = divmod(v, w).first;  // factors of multiplicity exactly k
            if (part.degree() > 0) out.emplace_back(monic(part), m * k);
            v = w;
            u = divmod(u, w).first;
            ++k;
        }
        if (u.degree() > 0) stack.push_back({u, m});  // leftover p-th powers
    }
    return out;
}

/// Distinct-degree decomposition of a monic squarefree polynomial: returns
/// (product of all irreducible factors of degree d, d) pairs.
inline std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& fin) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly f = monic(fin);
    FpPoly h = FpPoly::x(f.p);
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, mpz_class(static_cast<unsigned long>(f.p)), f);
        FpPoly g = gcd(sub(h, FpPoly::x(f.p)), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divmod(f, g).first;
            if (f.degree() == 0) break;
            h = mod(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

namespace detail {

inline std::uint64_t coeff_hash(const FpPoly& f) {
    std::uint64_t h = 1469598103934665603ULL ^ f.p;
    for (auto v : f.c) {
        h ^= v + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

/// Cantor-Zassenhaus equal-degree splitting of a monic squarefree product of
/// degree-d irreducibles. The generator is seeded from the coefficients so
/// repeated runs factor identically.
inline void equal_degree_split(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (g.degree() == d) {
        out.push_back(monic(g));
        return;
    }
    u64 p = g.p;
    for (;;) {
        std::vector<u64> rc(static_cast<std::size_t>(g.degree()), 0);
        for (auto& v : rc) v = rng() % p;
        FpPoly a(p, std::move(rc));
        if (a.degree() < 1) continue;
        FpPoly h;
        if (p == 2) {
            // Trace map over F_{2^d}.
            FpPoly t = a;
            FpPoly acc = a;
            for (int i = 1; i < d; ++i) {
                t = mulmod(t, t, g);
                acc = add(acc, t);
            }
            h = gcd(acc, g);
        } else {
            mpz_class q;
            mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            FpPoly w = powmod(a, (q - 1) / 2, g);
            h = gcd(sub(w, FpPoly::constant(p, 1)), g);
        }
        if (h.degree() > 0 && h.degree() < g.degree()) {
            FpPoly other = divmod(g, h).first;
            equal_degree_split(h, d, rng, out);
            equal_degree_split(other, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorization over F_p: unit * prod factors[i]^mult[i] with the
/// factors monic irreducible, sorted by degree then coefficients.
struct Factored {
    u64 unit;
    std::vector<std::pair<FpPoly, int>> factors;
};

inline Factored factor(const FpPoly& fin) {
    if (fin.is_zero()) throw DegenerateInput("factor of zero polynomial mod p");
    Factored res;
    res.unit = fin.leading();
    if (fin.degree() == 0) return res;
    std::mt19937_64 rng(detail::coeff_hash(fin));
    for (const auto& [sqf, mult] : squarefree_decomposition(fin)) {
        for (const auto& [prod, d] : distinct_degree(sqf)) {
            std::vector<FpPoly> irr;
            detail::equal_degree_split(prod, d, rng, irr);
            for (auto& f : irr) res.factors.emplace_back(std::move(f), mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    return res;
}

inline bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace fpp

/// Reduction of a rational polynomial mod p. Throws BadPrime when p divides
/// a coefficient denominator.
inline FpPoly reduce_mod_p(const UniPoly& f, fp::u64 p) {
    std::vector<fp::u64> c(static_cast<std::size_t>(f.degree() + 1), 0);
    for (int i = 0; i <= f.degree(); ++i) {
        auto r = f[i].mod_p(p);
        if (!r) throw BadPrime("prime divides a coefficient denominator");
        c[static_cast<std::size_t>(i)] = *r;
    }
    return FpPoly(p, std::move(c));
}

}  // namespace ellsurf
