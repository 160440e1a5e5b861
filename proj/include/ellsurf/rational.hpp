#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "ellsurf/errors.hpp"

namespace ellsurf {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Zero is represented as 0/1. The canonical form is
/// re-established by every constructor, so two equal values always compare
/// equal bit-for-bit.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(long n, long d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws DegenerateInput on malformed text.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw DegenerateInput("bad rational literal: " + s);
        if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
        q.canonicalize();
        return Rational(q);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(den(), num());
    }

    /// True iff the value is a square in Q. Zero counts as a square here;
    /// use is_nonzero_square for the indicator the rank formulas need.
    bool is_square() const {
        if (sign() < 0) return false;
        return mpz_perfect_square_p(num().get_mpz_t()) && mpz_perfect_square_p(den().get_mpz_t());
    }

    bool is_nonzero_square() const { return !is_zero() && is_square(); }

    /// Exact nonnegative square root, if the value is a square in Q.
    std::optional<Rational> sqrt() const {
        if (!is_square()) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
        return Rational(rn, rd);
    }

    /// Residue modulo an odd prime p, available only when p does not divide
    /// the denominator.
    std::optional<std::uint64_t> mod_p(std::uint64_t p) const {
        std::uint64_t d = mpz_fdiv_ui(den().get_mpz_t(), p);
        if (d == 0) return std::nullopt;
        std::uint64_t n = mpz_fdiv_ui(num().get_mpz_t(), p);
        // n * d^(p-2) mod p
        std::uint64_t inv = 1, base = d % p, e = p - 2;
        while (e) {
            if (e & 1) inv = static_cast<std::uint64_t>((__uint128_t)inv * base % p);
            base = static_cast<std::uint64_t>((__uint128_t)base * base % p);
            e >>= 1;
        }
        return static_cast<std::uint64_t>((__uint128_t)n * inv % p);
    }

    std::string str() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }

}  // namespace ellsurf
