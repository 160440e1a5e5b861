#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ellsurf/errors.hpp"
#include "ellsurf/polynomial.hpp"

namespace ellsurf {

namespace detail {

/// Integer polynomial, lowest degree first. Used as the fraction-free
/// substrate behind gcd / resultant / factorization so intermediate
/// coefficient growth stays under control.
using ZPoly = std::vector<mpz_class>;

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline ZPoly zscale(const ZPoly& a, const mpz_class& s) {
    if (s == 0) return {};
    ZPoly r(a);
    for (auto& c : r) c *= s;
    return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

inline mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // 0 for the zero polynomial
}

inline ZPoly zprimitive(const ZPoly& p) {
    mpz_class g = zcontent(p);
    if (g == 0) return {};
    ZPoly r(p);
    for (auto& c : r) c /= g;
    if (r.back() < 0)
        for (auto& c : r) c = -c;
    return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without
/// fractions. Requires deg a >= deg b, b nonzero.
inline ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
    int db = zdeg(b);
    const mpz_class& lb = b.back();
    while (zdeg(a) >= db && !a.empty()) {
        int k = zdeg(a) - db;
        mpz_class la = a.back();
        ZPoly t(static_cast<std::size_t>(k), mpz_class(0));
        t.insert(t.end(), b.begin(), b.end());
        a = zsub(zscale(a, lb), zscale(t, la));
    }
    return a;
}

/// Primitive polynomial remainder sequence. Returns the primitive gcd in Z[X]
/// with positive leading coefficient.
inline ZPoly zgcd_primitive(ZPoly a, ZPoly b) {
    a = zprimitive(a);
    b = zprimitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprimitive(zpseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Fraction-free determinant (Bareiss). Destroys its argument.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

/// Resultant of two nonzero integer polynomials via the Sylvester matrix.
inline mpz_class zresultant(const ZPoly& f, const ZPoly& g) {
    int m = zdeg(f), n = zdeg(g);
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    std::size_t sz = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(sz, std::vector<mpz_class>(sz, mpz_class(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g[static_cast<std::size_t>(n - j)];
    return bareiss_det(s);
}

/// Clears denominators: p = (1/den) * Z with Z primitive-scaled integer
/// coefficients (den = lcm of denominators; no content extraction).
inline std::pair<ZPoly, mpz_class> to_zpoly(const UniPoly& p) {
    mpz_class den(1);
    for (int i = 0; i <= p.degree(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p[i].den().get_mpz_t());
    ZPoly z(static_cast<std::size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) z[static_cast<std::size_t>(i)] = p[i].num() * (den / p[i].den());
    ztrim(z);
    return {z, den};
}

inline UniPoly from_zpoly(const ZPoly& z, const mpz_class& den = mpz_class(1)) {
    std::vector<Rational> c(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i], den);
    return UniPoly(std::move(c));
}

}  // namespace detail

/// Monic greatest common divisor over Q, computed by a primitive PRS on the
/// denominator-cleared integer images so coefficients never explode.
inline UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DegenerateInput("poly_gcd(0, 0)");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    auto [zp, dp] = detail::to_zpoly(p);
    auto [zq, dq] = detail::to_zpoly(q);
    (void)dp;
    (void)dq;
    return detail::from_zpoly(detail::zgcd_primitive(zp, zq)).monic();
}

namespace detail {

/// Resultant with the degenerate conventions the M-interpolation needs:
/// Res(f, 0) = 0, Res(f, c) = c^deg f, Res(c, g) = c^deg g, Res(c1, c2) = 1.
inline Rational resultant_relaxed(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return Rational(0);
    auto [zp, dp] = to_zpoly(p);
    auto [zq, dq] = to_zpoly(q);
    mpz_class rz = zresultant(zp, zq);
    // Res(P/dp, Q/dq) = Res(P, Q) / (dp^deg q * dq^deg p)
    mpz_class sp, sq;
    mpz_pow_ui(sp.get_mpz_t(), dp.get_mpz_t(), static_cast<unsigned long>(q.degree()));
    mpz_pow_ui(sq.get_mpz_t(), dq.get_mpz_t(), static_cast<unsigned long>(p.degree()));
    return Rational(rz, sp * sq);
}

}  // namespace detail

/// Resultant of two nonzero polynomials (Sylvester determinant).
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DegenerateInput("resultant of zero polynomial");
    return detail::resultant_relaxed(p, q);
}

/// Discriminant of a nonconstant polynomial:
/// (-1)^(d(d-1)/2) Res(p, p') / lc(p).
inline Rational discriminant(const UniPoly& p) {
    int d = p.degree();
    if (d < 1) throw DegenerateInput("discriminant of constant polynomial");
    Rational r = detail::resultant_relaxed(p, p.derivative());
    r = r / p.leading();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) r = -r;
    return r;
}

/// Product of the distinct monic irreducible factors (the radical).
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw DegenerateInput("squarefree part of zero polynomial");
    if (p.degree() == 0) return UniPoly(Rational(1));
    UniPoly g = poly_gcd(p, p.derivative());
    auto q = p.divided_exactly_by(g);
    if (!q) throw InvariantViolation("gcd(p, p') does not divide p");
    return q->monic();
}

/// Yun's squarefree decomposition: p = lc * prod parts[i].first ^ parts[i].second
/// with the parts monic, squarefree and pairwise coprime.
inline std::pair<Rational, std::vector<std::pair<UniPoly, int>>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw DegenerateInput("squarefree decomposition of zero polynomial");
    std::vector<std::pair<UniPoly, int>> parts;
    Rational lc = p.leading();
    if (p.degree() == 0) return {lc, parts};
    UniPoly f = p.monic();
    UniPoly fp = f.derivative();
    UniPoly u = poly_gcd(f, fp);
    UniPoly v = *f.divided_exactly_by(u);
    UniPoly w = *fp.divided_exactly_by(u);
    UniPoly h = w - v.derivative();
    int k = 1;
    while (v.degree() > 0) {
        UniPoly g = h.is_zero() ? v.monic() : poly_gcd(v, h);
        if (g.degree() > 0) parts.emplace_back(g, k);
        v = *v.divided_exactly_by(g);
        if (h.is_zero()) {
            if (v.degree() > 0) throw InvariantViolation("squarefree decomposition stalled");
            break;
        }
        UniPoly y = *h.divided_exactly_by(g);
        h = y - v.derivative();
        ++k;
    }
    return {lc, parts};
}

/// Lagrange interpolation through distinct sample points, exact over Q.
inline UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
    UniPoly acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        UniPoly basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            basis = basis * UniPoly({-pts[j].first, Rational(1)});
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + basis * (pts[i].second / denom);
    }
    return acc;
}

/// G-adic digits of F: F = sum digits[i] * G^i with deg digits[i] < deg G.
inline std::vector<UniPoly> radix_expansion(UniPoly f, const UniPoly& g) {
    if (g.degree() < 1) throw DegenerateInput("radix expansion in constant base");
    std::vector<UniPoly> digits;
    while (!f.is_zero()) {
        auto [q, r] = f.divmod(g);
        digits.push_back(r);
        f = std::move(q);
    }
    return digits;
}

/// If F = U(G) for some polynomial U, returns U.
inline std::optional<UniPoly> decompose_as(const UniPoly& f, const UniPoly& g) {
    if (g.degree() < 1) return std::nullopt;
    std::vector<Rational> u;
    for (const auto& d : radix_expansion(f, g)) {
        if (d.degree() > 0) return std::nullopt;
        u.push_back(d[0]);
    }
    return UniPoly(std::move(u));
}

}  // namespace ellsurf
