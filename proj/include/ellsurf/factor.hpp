#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "ellsurf/exactalg.hpp"
#include "ellsurf/fppoly.hpp"
#include "ellsurf/polynomial.hpp"

namespace ellsurf {

/// Complete factorization over Q: content * prod factors[i]^mult[i]
/// reproduces the input exactly; factors are monic, irreducible, pairwise
/// distinct and sorted (degree, then coefficients).
struct Factorization {
    Rational content;
    std::vector<std::pair<UniPoly, int>> factors;

    UniPoly reassemble() const {
        UniPoly r{content};
        for (const auto& [f, m] : factors) r = r * f.pow(m);
        return r;
    }
};

namespace detail {

// ---- Hensel lifting over Z/p^k ------------------------------------------

inline ZPoly zp_reduce(const ZPoly& a, const mpz_class& m) {
    ZPoly r(a);
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(r);
    return r;
}

inline ZPoly zp_from_fp(const FpPoly& a) {
    ZPoly r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = mpz_class(static_cast<unsigned long>(a.c[i]));
    return r;
}

inline FpPoly fp_from_zp(const ZPoly& a, fp::u64 p) {
    std::vector<fp::u64> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    return FpPoly(p, std::move(c));
}

/// Lifts a coprime pair: f == g0*h0 (mod p) with f, g0, h0 monic becomes
/// f == G*H (mod target) by repeated linear steps with fixed Bezout data.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const FpPoly& g0, const FpPoly& h0,
                                           fp::u64 p, const mpz_class& target) {
    auto [one, s, t] = fpp::ext_gcd(g0, h0);
    if (one.degree() != 0) throw InvariantViolation("hensel pair with non-coprime factors");
    ZPoly G = zp_from_fp(g0);
    ZPoly H = zp_from_fp(h0);
    mpz_class m(static_cast<unsigned long>(p));
    while (m < target) {
        ZPoly diff = zsub(f, zmul(G, H));
        ZPoly e(diff.size());
        for (std::size_t i = 0; i < diff.size(); ++i) e[i] = diff[i] / m;
        FpPoly ebar = fp_from_zp(e, p);
        FpPoly dg = fpp::mod(fpp::mul(ebar, t), g0);
        FpPoly dh = fpp::mod(fpp::mul(ebar, s), h0);
        ZPoly zg = zp_from_fp(dg), zh = zp_from_fp(dh);
        if (G.size() < zg.size()) G.resize(zg.size(), mpz_class(0));
        for (std::size_t i = 0; i < zg.size(); ++i) G[i] += m * zg[i];
        if (H.size() < zh.size()) H.resize(zh.size(), mpz_class(0));
        for (std::size_t i = 0; i < zh.size(); ++i) H[i] += m * zh[i];
        m *= p;
    }
    return {zp_reduce(G, m), zp_reduce(H, m)};
}

/// Lifts the whole list of pairwise coprime monic mod-p factors of the monic
/// integer polynomial f to factors mod a power of p at least `target`.
inline void hensel_list(const ZPoly& f, const std::vector<FpPoly>& facs, fp::u64 p,
                        const mpz_class& target, std::vector<ZPoly>& out) {
    if (facs.size() == 1) {
        mpz_class m(static_cast<unsigned long>(p));
        while (m < target) m *= p;
        out.push_back(zp_reduce(f, m));
        return;
    }
    std::size_t half = facs.size() / 2;
    std::vector<FpPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
    std::vector<FpPoly> right(facs.begin() + static_cast<long>(half), facs.end());
    FpPoly g0 = FpPoly::constant(p, 1), h0 = FpPoly::constant(p, 1);
    for (const auto& x : left) g0 = fpp::mul(g0, x);
    for (const auto& x : right) h0 = fpp::mul(h0, x);
    auto [G, H] = hensel_pair(f, g0, h0, p, target);
    hensel_list(G, left, p, target, out);
    hensel_list(H, right, p, target, out);
}

inline void zbalance(ZPoly& a, const mpz_class& m) {
    mpz_class half = m / 2;
    for (auto& c : a)
        if (c > half) c -= m;
    ztrim(a);
}

inline std::pair<ZPoly, ZPoly> zdivmod(const ZPoly& a, const ZPoly& d) {
    // Division by a monic divisor, exact integer arithmetic.
    ZPoly rem = a;
    if (zdeg(rem) < zdeg(d)) return {ZPoly{}, rem};
    ZPoly q(static_cast<std::size_t>(zdeg(rem) - zdeg(d)) + 1, mpz_class(0));
    while (zdeg(rem) >= zdeg(d) && !rem.empty()) {
        int k = zdeg(rem) - zdeg(d);
        mpz_class f = rem.back();
        q[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= zdeg(d); ++i)
            rem[static_cast<std::size_t>(i + k)] -= f * d[static_cast<std::size_t>(i)];
        ztrim(rem);
    }
    return {q, rem};
}

/// Zassenhaus factorization of a monic squarefree integer polynomial of
/// degree >= 2: factor mod the smallest good odd prime, lift past the
/// Mignotte bound, recombine subsets. Degrees here never exceed 12, so the
/// subset search is cheap and no lattice reduction is warranted.
inline std::vector<ZPoly> zassenhaus_monic(const ZPoly& T) {
    int n = zdeg(T);
    if (n <= 1) return {T};

    fp::u64 p = 3;
    FpPoly Tbar;
    for (;; p += 2) {
        if (!fp::is_prime(p)) continue;
        Tbar = fp_from_zp(T, p);
        if (Tbar.degree() != n) continue;  // cannot happen for monic T, kept as a guard
        FpPoly g = fpp::gcd(Tbar, fpp::derivative(Tbar));
        if (g.degree() == 0) break;
    }

    auto fac = fpp::factor(Tbar);
    std::vector<FpPoly> modular;
    for (auto& [f, mult] : fac.factors) {
        if (mult != 1) throw InvariantViolation("squarefree input factored with multiplicity mod p");
        modular.push_back(f);
    }
    if (modular.size() == 1) return {T};

    // Landau-Mignotte style bound on any monic divisor's coefficients.
    mpz_class norm2(0);
    for (const auto& c : T) norm2 += c * c;
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
    bound *= pw;
    mpz_class target = 2 * bound + 1;

    std::vector<ZPoly> lifted;
    hensel_list(T, modular, p, target, lifted);
    mpz_class m(static_cast<unsigned long>(p));
    while (m < target) m *= p;

    std::vector<ZPoly> result;
    std::vector<std::size_t> active(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) active[i] = i;
    ZPoly rem = T;

    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        ZPoly prod{mpz_class(1)};
        for (auto idx : subset) prod = zp_reduce(zmul(prod, lifted[idx]), m);
        zbalance(prod, m);
        if (prod.empty()) return false;
        auto [q, r] = zdivmod(rem, prod);
        if (!r.empty()) return false;
        result.push_back(prod);
        rem = q;
        return true;
    };

    std::size_t size = 1;
    while (2 * size <= active.size()) {
        bool found = false;
        std::vector<std::size_t> comb(size);
        // iterate subsets of `active` of cardinality `size` in index order
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            for (std::size_t i = 0; i < size; ++i) comb[i] = active[idx[i]];
            if (try_subset(comb)) {
                std::vector<std::size_t> next;
                for (auto a : active)
                    if (std::find(comb.begin(), comb.end(), a) == comb.end()) next.push_back(a);
                active = std::move(next);
                found = true;
                break;
            }
            // next combination
            std::size_t i = size;
            while (i-- > 0) {
                if (idx[i] + (size - i) < active.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++size;
    }
    if (zdeg(rem) > 0) result.push_back(rem);
    return result;
}

}  // namespace detail

/// Factors a monic squarefree rational polynomial into monic irreducibles.
inline std::vector<UniPoly> factor_squarefree_monic(const UniPoly& part) {
    if (part.degree() == 1) return {part};
    auto [P, den] = detail::to_zpoly(part);
    (void)den;
    P = detail::zprimitive(P);
    mpz_class ell = P.back();
    detail::ZPoly T;
    if (ell == 1) {
        T = P;
    } else {
        // Monicize by the substitution X -> X/lc, scaled back afterwards.
        int n = detail::zdeg(P);
        T.resize(P.size());
        mpz_class pw(1);
        for (int i = n; i >= 0; --i) {
            T[static_cast<std::size_t>(i)] = P[static_cast<std::size_t>(i)] * pw;
            if (i > 0) pw *= ell;
        }
    }
    std::vector<UniPoly> out;
    Rational lr(ell);
    for (const auto& g : detail::zassenhaus_monic(T)) {
        UniPoly gq = detail::from_zpoly(g);
        if (ell != 1) {
            gq = gq.scale_arg(lr);  // g(lc * X)
            gq = gq.monic();
        }
        out.push_back(gq);
    }
    return out;
}

/// Complete factorization over Q. Deterministic output order.
inline Factorization factor_over_Q(const UniPoly& p) {
    if (p.is_zero()) throw DegenerateInput("factorization of the zero polynomial");
    auto [lc, parts] = squarefree_decomposition(p);
    Factorization res;
    res.content = lc;
    for (const auto& [part, mult] : parts) {
        for (auto& f : factor_squarefree_monic(part)) res.factors.emplace_back(std::move(f), mult);
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_sort_less(a.first, b.first); });
    return res;
}

/// Number of irreducible factors counted with multiplicity.
inline int big_omega(const UniPoly& p) {
    int n = 0;
    for (const auto& [f, m] : factor_over_Q(p).factors) {
        (void)f;
        n += m;
    }
    return n;
}

/// Number of distinct irreducible factors.
inline int small_omega(const UniPoly& p) {
    return static_cast<int>(factor_over_Q(p).factors.size());
}

/// Indicator that p is a nonzero square in Q[X] (for constants: in Q).
inline bool is_square_poly(const UniPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return p[0].is_nonzero_square();
    auto fac = factor_over_Q(p);
    if (!fac.content.is_nonzero_square()) return false;
    for (const auto& [f, m] : fac.factors) {
        (void)f;
        if (m % 2 != 0) return false;
    }
    return true;
}

/// Factorization over F_p of the mod-p reduction of a rational polynomial.
inline fpp::Factored factor_over_Fp(const UniPoly& p, fp::u64 prime) {
    if (!fp::is_prime(prime)) throw BadPrime("modulus is not prime");
    if (p.is_zero()) throw BadPrime("zero polynomial mod p");
    FpPoly f = reduce_mod_p(p, prime);  // throws BadPrime on denominator hit
    if (f.is_zero()) throw BadPrime("polynomial vanishes mod p");
    return fpp::factor(f);
}

}  // namespace ellsurf
