#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ellsurf/errors.hpp"
#include "ellsurf/rational.hpp"

namespace ellsurf {

/// Dense univariate polynomial over a coefficient field K, coefficients
/// stored lowest degree first. The zero polynomial has an empty coefficient
/// vector; otherwise the leading coefficient is nonzero. K must be
/// constructible from int and support field arithmetic plus ==.
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(const K& c) {
        if (!(c == K(0))) c_.push_back(c);
    }
    Poly(int c) : Poly(K(c)) {}
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    /// c * X^k
    static Poly monomial(int k, const K& c = K(1)) {
        if (c == K(0)) return Poly();
        std::vector<K> v(static_cast<std::size_t>(k) + 1, K(0));
        v.back() = c;
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of X^i; zero beyond the stored range.
    K operator[](int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const K& leading() const {
        if (is_zero()) throw DegenerateInput("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<K>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = K(0) - c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<K> v(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
        return Poly(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> v(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(v));
    }
    Poly operator*(const K& s) const {
        if (s == K(0)) return Poly();
        Poly r(*this);
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    Poly operator/(const K& s) const {
        Poly r(*this);
        for (auto& c : r.c_) c = c / s;
        return r;
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const {
        Poly r(K(1)), b(*this);
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(v));
    }

    /// Horner evaluation at an element of K.
    K operator()(const K& x) const {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Horner evaluation in a larger ring; lift maps K into T.
    template <class T, class Lift>
    T eval_lifted(const T& x, Lift lift) const {
        T acc = lift(K(0));
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
        return acc;
    }

    Poly compose(const Poly& g) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
        return acc;
    }

    /// Multiply by X^k.
    Poly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<K> v(static_cast<std::size_t>(k), K(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    /// P(s X) for a scalar s.
    Poly scale_arg(const K& s) const {
        Poly r(*this);
        K sp(1);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] = r.c_[i] * sp;
            sp = sp * s;
        }
        r.trim();
        return r;
    }

    Poly monic() const {
        if (is_zero()) throw DegenerateInput("monic of zero polynomial");
        return *this / leading();
    }

    /// Quotient and remainder; requires a nonzero divisor over a field.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly rem(*this);
        if (rem.degree() < d.degree()) return {Poly(), rem};
        std::vector<K> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, K(0));
        K dl = d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            K f = rem.leading() / dl;
            q[static_cast<std::size_t>(k)] = f;
            rem = rem - d.shifted(k) * f;
        }
        return {Poly(std::move(q)), rem};
    }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    /// Exact quotient; nullopt when the division leaves a remainder.
    std::optional<Poly> divided_exactly_by(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    std::string to_string(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const K& c = c_[i];
            if (c == K(0)) continue;
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            if (neg) cs = cs.substr(1);
            if (i == 0) {
                out += cs;
            } else {
                bool unit = (cs == "1");
                if (!unit) out += cs + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    static std::string coeff_str(const K& c) {
        if constexpr (std::is_same_v<K, Rational>) {
            // Parenthesize fractions so printing round-trips through the parser.
            std::string s = c.str();
            return s;
        } else {
            return c.str();
        }
    }
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

using UniPoly = Poly<Rational>;

/// Monic gcd via the Euclidean algorithm; valid over any field K. The
/// specialized integer-PRS path for Rational coefficients lives in
/// exactalg.hpp; this generic version serves other coefficient fields.
template <class K>
Poly<K> monic_gcd(Poly<K> a, Poly<K> b) {
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd(0, 0)");
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Total order used wherever factor lists need a canonical arrangement:
/// degree first, then coefficients from the subleading one down to the
/// constant term.
inline bool poly_sort_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) {
    return os << p.to_string();
}

}  // namespace ellsurf
