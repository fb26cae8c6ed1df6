#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar over GMP integers.
 *
 * Numerator carries the sign, denominator is always positive, and every
 * value is kept in lowest terms so equality is structural. All arithmetic
 * is exact; there is no floating-point anywhere in the core.
 */

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "finrr/errors.hpp"

namespace finrr {

using Int = mpz_class;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(const Int& v) : num_(v), den_(1) {}
    Rational(const Int& num, const Int& den) : num_(num), den_(den) {
        if (den_ == 0) throw Error("Rational: zero denominator");
        canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    // Largest integer <= value.
    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        return q;
    }

    // Smallest integer >= value.
    Int ceil() const {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        return q;
    }

    // Nearest integer, halves rounded up (floor(x + 1/2)).
    Int round() const {
        return Rational(2 * num_ + den_, 2 * den_).floor();
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Serialized form: "a/b", or just "a" when the value is an integer.
    std::string str() const {
        if (den_ == 1) return num_.get_str();
        return num_.get_str() + "/" + den_.get_str();
    }

    /// Parses "a" or "a/b" with an optional leading '-'; the denominator
    /// must be a positive integer literal. Non-canonical inputs such as
    /// "2/4" are accepted and reduced.
    static Rational parse(const std::string& text);

private:
    Int num_;
    Int den_; // > 0

    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace finrr
