#pragma once

/**
 * @file lattice.hpp
 * @brief Finitely generated subgroups H of V_0 (degree-zero divisors).
 *
 * Generators are scaled by the lcm of their denominators so that all
 * lattice algebra happens over Z. The scaled generator matrix is reduced
 * to a canonical column Hermite form; the resulting basis is linearly
 * independent and spans the same subgroup of Q^n over Z. An exact
 * operator-norm bound derived from the pseudo-inverse converts an
 * inf-norm ball in H into a finite coefficient box, which makes ball
 * enumeration certified and complete.
 */

#include <optional>
#include <vector>

#include "finrr/divisor.hpp"

namespace finrr {

class SubgroupLattice {
public:
    /// Builds the subgroup generated by `generators`, each of which must
    /// have length n and degree 0. An empty generator list is rejected
    /// unless `allow_empty` opts into the trivial subgroup {0}.
    static SubgroupLattice build(std::size_t n, std::vector<Divisor> generators,
                                 bool allow_empty = false);

    std::size_t dimension() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    bool is_trivial() const { return basis_.empty(); }

    /// Original generators, retained for serialization round-trips.
    const std::vector<Divisor>& generators() const { return generators_; }

    /// Reduced basis as rational divisors (scaled columns divided by scale).
    /// Canonical: two lattices are the same subgroup iff their bases match.
    const std::vector<Divisor>& basis() const { return basis_divisors_; }

    /// Integer basis columns (length n each), in column Hermite form.
    const std::vector<std::vector<Int>>& scaled_basis() const { return basis_; }

    const Int& scale() const { return scale_; }

    /// Exact C with ||m||_inf <= C * ||B m||_inf for the rational basis B.
    const Rational& coeff_bound_factor() const { return coeff_bound_; }

    /// Integer coefficient box bound floor(C * radius) for an inf-norm ball.
    Int coeff_box_bound(const Rational& radius) const;

    /// The lattice element with the given basis coefficients.
    Divisor from_coefficients(const std::vector<Int>& m) const;

    /// Membership test: returns the basis coefficients m with B m = b when
    /// b lies in the subgroup, nullopt otherwise.
    std::optional<std::vector<Int>> member(const Divisor& b) const;

    /// All h in H with ||h||_inf <= radius, ordered lexicographically by
    /// basis coefficient vector.
    std::vector<Divisor> enumerate_ball(const Rational& radius) const;

    /// Nearest-integer rounding of the pseudo-inverse applied to y: the
    /// coefficient vector of a lattice point near y. Translating y by it
    /// keeps all subgroup queries exact while shrinking norms.
    std::vector<Int> nearest_coefficients(const Divisor& y) const;

    friend bool operator==(const SubgroupLattice& a, const SubgroupLattice& b) {
        return a.n_ == b.n_ && a.basis_divisors_ == b.basis_divisors_;
    }
    friend bool operator!=(const SubgroupLattice& a, const SubgroupLattice& b) {
        return !(a == b);
    }

    /// Default is the dimension-0 placeholder; build() makes real lattices.
    SubgroupLattice() = default;

private:
    std::size_t n_ = 0;
    std::vector<Divisor> generators_;
    std::vector<std::vector<Int>> basis_;  // columns, length n_, Hermite form
    std::vector<std::size_t> pivot_rows_;  // first nonzero row of each column
    std::vector<Divisor> basis_divisors_;
    Int scale_ = 1;
    std::vector<std::vector<Rational>> pseudo_inverse_; // rank x n, of the rational basis
    Rational coeff_bound_;
};

} // namespace finrr
