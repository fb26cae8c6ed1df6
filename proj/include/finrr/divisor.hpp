#pragma once

/**
 * @file divisor.hpp
 * @brief Divisors: points of Q^n with exact componentwise algebra.
 *
 * A divisor is an immutable fixed-length vector of rationals. Componentwise
 * operations are defined only between divisors of equal length; mixing
 * lengths throws LengthMismatch.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "finrr/rational.hpp"

namespace finrr {

class Divisor {
public:
    Divisor() = default;
    explicit Divisor(std::vector<Rational> components) : comps_(std::move(components)) {}
    explicit Divisor(std::size_t n) : comps_(n) {}
    Divisor(std::initializer_list<Rational> components) : comps_(components) {}

    std::size_t size() const { return comps_.size(); }
    const Rational& operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<Rational>& components() const { return comps_; }

    friend bool operator==(const Divisor& a, const Divisor& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

    // Lexicographic by component; a total order usable as a container key.
    friend bool operator<(const Divisor& a, const Divisor& b);

    friend Divisor operator+(const Divisor& a, const Divisor& b);
    friend Divisor operator-(const Divisor& a, const Divisor& b);
    Divisor operator-() const;
    friend Divisor operator*(const Rational& c, const Divisor& x);

    /// Serialized form: components joined by ',', e.g. "3,-1" or "1/2,0".
    std::string str() const;

    /// Parses a comma-separated list of rationals; whitespace around
    /// entries is ignored.
    static Divisor parse(const std::string& text);

private:
    std::vector<Rational> comps_;
};

/// deg(x) = sum of components.
Rational degree(const Divisor& x);

/// Componentwise max(x(i), 0).
Divisor positive_part(const Divisor& x);

/// Componentwise min(x(i), 0).
Divisor negative_part(const Divisor& x);

/// Exact l1 distance between equal-length divisors.
Rational taxicab(const Divisor& x, const Divisor& y);

/// true iff x(i) <= y(i) for all i.
bool leq(const Divisor& x, const Divisor& y);

/// Max absolute component (0 for the empty divisor).
Rational inf_norm(const Divisor& x);

Divisor zero_divisor(std::size_t n);

std::ostream& operator<<(std::ostream& os, const Divisor& x);

} // namespace finrr
