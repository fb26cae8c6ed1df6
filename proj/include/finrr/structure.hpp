#pragma once

/**
 * @file structure.hpp
 * @brief A Riemann-Roch instance: (n, g, kappa, nu-generators, H).
 *
 * The dimension ell(x) = min over nu in N of deg((x - nu)^+), where N is
 * the union of the H-orbits of the nu-generators. The minimum over the
 * infinite group H is computed by a finite certified search: for h in V_0,
 *
 *     deg((y - h)^+) >= ||h||_inf / (n-1) - ||y||_inf,
 *
 * so no h with ||h||_inf > (n-1) * (best + ||y||_inf) can beat a known
 * value `best`. Candidates are drawn from the coefficient box given by the
 * lattice's pseudo-inverse bound, after translating y to a nearby lattice
 * coset representative to keep the search small.
 */

#include <optional>
#include <utility>
#include <vector>

#include "finrr/lattice.hpp"

namespace finrr {

class RRStructure {
public:
    /// Validates and assembles a structure. Exact duplicate nu-generators
    /// are dropped (first occurrence kept). Violations of the degree
    /// hypotheses deg(nu_i) = g-1 and deg(kappa) = 2g-2 are rejected
    /// unless `allow_broken` is set; broken instances remain evaluable so
    /// they can be diagnosed.
    static RRStructure build(std::size_t n, Rational genus, Divisor kappa,
                             std::vector<Divisor> nu_generators, SubgroupLattice lattice,
                             bool allow_broken = false);

    std::size_t dimension() const { return n_; }
    const Rational& genus() const { return genus_; }
    const Divisor& kappa() const { return kappa_; }
    const std::vector<Divisor>& nu_generators() const { return nu_; }
    const SubgroupLattice& lattice() const { return lattice_; }
    bool allow_broken() const { return allow_broken_; }

    struct DegreeReport {
        bool kappa_ok = false;          // deg(kappa) == 2g - 2
        std::vector<bool> nu_ok;        // deg(nu_i) == g - 1
        bool ok() const;
    };
    DegreeReport check_degrees() const;

    /// ell(x): exact attained minimum of deg((x - nu_i - h)^+).
    Rational ell(const Divisor& x) const;

    struct EllWitness {
        Rational value;
        std::size_t nu_index = 0;
        Divisor translate;              // the minimizing h in H
        std::vector<Int> coefficients;  // basis coefficients of translate
    };
    /// ell with the minimizing (nu_i, h); among minimizers the witness has
    /// the lexicographically least coefficient vector, ties going to the
    /// smaller generator index.
    EllWitness ell_witness(const Divisor& x) const;

    /// ell(x) - ell(kappa - x) - (deg(x) - g + 1); exactly 0 whenever the
    /// symmetry condition holds.
    Rational rr_residual(const Divisor& x) const;

    struct SymmetryEntry {
        std::size_t nu_index = 0;
        std::optional<std::size_t> partner;      // j with kappa - nu_i ~ nu_j
        std::vector<Int> coefficients;           // witness when partner set
    };
    struct SymmetryReport {
        std::vector<SymmetryEntry> entries;
        bool ok = false;
    };
    /// Checks nu in N <=> kappa - nu in N on the generators; because N is
    /// a finite union of orbits and nu -> kappa - nu is an involution on
    /// V_{g-1}, checking generators suffices.
    SymmetryReport verify_symmetry() const;

    /// x in N: deg(x) = g-1 and x ~ nu_i for some i.
    bool in_N(const Divisor& x) const;

    /// x ~ y, i.e. x - y in H.
    bool equivalent(const Divisor& x, const Divisor& y) const;

    /// Pairs (i, j), i < j, of distinct generators that are H-equivalent;
    /// they are legal but redundant (same orbit).
    std::vector<std::pair<std::size_t, std::size_t>> lint_equivalent_generators() const;

private:
    RRStructure() = default;

    std::size_t n_ = 0;
    Rational genus_;
    Divisor kappa_;
    std::vector<Divisor> nu_;
    SubgroupLattice lattice_;
    bool allow_broken_ = false;
};

} // namespace finrr
