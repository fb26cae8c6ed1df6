#include "finrr/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace finrr {

namespace {

// Per-generator search state: y = x - nu_i translated by the nearest
// lattice point, with everything scaled to a common integer denominator.
struct Candidate {
    std::size_t nu_index;
    std::vector<Int> shift;       // coefficients of the pre-applied translate
    Divisor reduced;              // y - lattice * shift
    Rational h0_value;            // deg(reduced^+)
};

Rational positive_degree(const Divisor& y) {
    return degree(positive_part(y));
}

} // namespace

bool RRStructure::DegreeReport::ok() const {
    if (!kappa_ok) return false;
    return std::all_of(nu_ok.begin(), nu_ok.end(), [](bool b) { return b; });
}

RRStructure RRStructure::build(std::size_t n, Rational genus, Divisor kappa,
                               std::vector<Divisor> nu_generators, SubgroupLattice lattice,
                               bool allow_broken) {
    if (n == 0) throw Error("structure: dimension must be >= 1");
    if (kappa.size() != n)
        throw LengthMismatch("structure: kappa has length " + std::to_string(kappa.size()) +
                             ", expected " + std::to_string(n));
    if (lattice.dimension() != n)
        throw LengthMismatch("structure: lattice dimension " + std::to_string(lattice.dimension()) +
                             ", expected " + std::to_string(n));
    if (nu_generators.empty()) throw Error("structure: at least one nu-generator required");

    RRStructure s;
    s.n_ = n;
    s.genus_ = std::move(genus);
    s.kappa_ = std::move(kappa);
    s.lattice_ = std::move(lattice);
    s.allow_broken_ = allow_broken;

    std::set<Divisor> seen;
    for (auto& nu : nu_generators) {
        if (nu.size() != n)
            throw LengthMismatch("structure: nu-generator of length " + std::to_string(nu.size()) +
                                 ", expected " + std::to_string(n));
        if (seen.insert(nu).second) s.nu_.push_back(std::move(nu));
    }

    if (!allow_broken) {
        auto report = s.check_degrees();
        if (!report.kappa_ok)
            throw DegreeHypothesisError("structure: deg(kappa) = " + degree(s.kappa_).str() +
                                        " but 2g-2 = " + (s.genus_ * Rational(2) - Rational(2)).str());
        for (std::size_t i = 0; i < report.nu_ok.size(); ++i)
            if (!report.nu_ok[i])
                throw DegreeHypothesisError("structure: deg(nu[" + std::to_string(i) + "]) = " +
                                            degree(s.nu_[i]).str() + " but g-1 = " +
                                            (s.genus_ - Rational(1)).str());
    }
    return s;
}

RRStructure::DegreeReport RRStructure::check_degrees() const {
    DegreeReport r;
    r.kappa_ok = degree(kappa_) == genus_ * Rational(2) - Rational(2);
    r.nu_ok.reserve(nu_.size());
    const Rational target = genus_ - Rational(1);
    for (const auto& nu : nu_) r.nu_ok.push_back(degree(nu) == target);
    return r;
}

RRStructure::EllWitness RRStructure::ell_witness(const Divisor& x) const {
    if (x.size() != n_)
        throw LengthMismatch("ell: divisor length " + std::to_string(x.size()) +
                             ", expected " + std::to_string(n_));

    // h = 0 pass (after translating near the lattice) fixes the initial
    // best value and the initial witness.
    std::vector<Candidate> candidates;
    candidates.reserve(nu_.size());
    for (std::size_t i = 0; i < nu_.size(); ++i) {
        Candidate c;
        c.nu_index = i;
        Divisor y = x - nu_[i];
        c.shift = lattice_.nearest_coefficients(y);
        c.reduced = y - lattice_.from_coefficients(c.shift);
        c.h0_value = positive_degree(c.reduced);
        candidates.push_back(std::move(c));
    }

    EllWitness best;
    bool have = false;
    auto consider = [&](const Rational& value, std::size_t nu_index, std::vector<Int> coeffs) {
        if (have) {
            if (best.value < value) return;
            if (value == best.value) {
                const bool smaller =
                    std::lexicographical_compare(coeffs.begin(), coeffs.end(),
                                                 best.coefficients.begin(), best.coefficients.end());
                if (!smaller && !(coeffs == best.coefficients && nu_index < best.nu_index)) return;
            }
        }
        best.value = value;
        best.nu_index = nu_index;
        best.coefficients = std::move(coeffs);
        have = true;
    };
    for (const auto& c : candidates) consider(c.h0_value, c.nu_index, c.shift);

    const std::size_t k = lattice_.rank();
    if (k > 0 && n_ > 1) {
        const Rational fan_out = Rational(static_cast<long>(n_) - 1);
        const Int& scale = lattice_.scale();
        const auto& basis = lattice_.scaled_basis();

        for (const auto& c : candidates) {
            // Any h improving on the current best satisfies
            // ||h||_inf <= (n-1) * (best + ||reduced||_inf).
            const Rational radius = fan_out * (best.value + inf_norm(c.reduced));
            const Int box = lattice_.coeff_box_bound(radius);
            if (box == 0) continue; // only the already-considered h = 0 point

            // Scale y and the basis columns to a common denominator so the
            // objective is an integer sum.
            Int denom = scale;
            for (std::size_t i = 0; i < n_; ++i)
                denom = lcm(denom, c.reduced[i].denominator());
            std::vector<Int> y_scaled(n_);
            for (std::size_t i = 0; i < n_; ++i)
                y_scaled[i] = (c.reduced[i] * Rational(denom)).numerator();
            const Int col_factor = denom / scale;
            std::vector<std::vector<Int>> cols(k, std::vector<Int>(n_));
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < n_; ++i)
                    cols[j][i] = basis[j][i] * col_factor;

            // Objective values that can still matter are <= best, i.e.
            // scaled values <= floor(best * denom).
            Int threshold = (best.value * Rational(denom)).floor();

            std::vector<Int> m(k);
            std::vector<Int> w = y_scaled; // y - B m, scaled
            auto rec = [&](auto&& self, std::size_t depth) -> void {
                if (depth == k) {
                    Int f = 0;
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (w[i] > 0) f += w[i];
                        if (f > threshold) return;
                    }
                    Rational value(f, denom);
                    std::vector<Int> coeffs(k);
                    for (std::size_t j = 0; j < k; ++j) coeffs[j] = c.shift[j] + m[j];
                    consider(value, c.nu_index, std::move(coeffs));
                    threshold = (best.value * Rational(denom)).floor();
                    return;
                }
                for (Int t = -box; t <= box; ++t) {
                    m[depth] = t;
                    if (t != -box)
                        for (std::size_t i = 0; i < n_; ++i) w[i] -= cols[depth][i];
                    else
                        for (std::size_t i = 0; i < n_; ++i) w[i] += box * cols[depth][i];
                    self(self, depth + 1);
                }
                // restore w for this depth (w currently has -box*col removed)
                for (std::size_t i = 0; i < n_; ++i) w[i] += box * cols[depth][i];
            };
            rec(rec, 0);
        }
    }

    best.translate = lattice_.from_coefficients(best.coefficients);
    return best;
}

Rational RRStructure::ell(const Divisor& x) const {
    return ell_witness(x).value;
}

Rational RRStructure::rr_residual(const Divisor& x) const {
    if (x.size() != n_)
        throw LengthMismatch("rr_residual: divisor length " + std::to_string(x.size()) +
                             ", expected " + std::to_string(n_));
    return ell(x) - ell(kappa_ - x) - (degree(x) - genus_ + Rational(1));
}

RRStructure::SymmetryReport RRStructure::verify_symmetry() const {
    SymmetryReport report;
    report.ok = true;
    for (std::size_t i = 0; i < nu_.size(); ++i) {
        SymmetryEntry entry;
        entry.nu_index = i;
        const Divisor target = kappa_ - nu_[i];
        for (std::size_t j = 0; j < nu_.size(); ++j) {
            if (auto m = lattice_.member(target - nu_[j])) {
                entry.partner = j;
                entry.coefficients = std::move(*m);
                break;
            }
        }
        if (!entry.partner) report.ok = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

bool RRStructure::in_N(const Divisor& x) const {
    if (x.size() != n_)
        throw LengthMismatch("in_N: divisor length " + std::to_string(x.size()) +
                             ", expected " + std::to_string(n_));
    if (degree(x) != genus_ - Rational(1)) return false;
    for (const auto& nu : nu_)
        if (lattice_.member(x - nu)) return true;
    return false;
}

bool RRStructure::equivalent(const Divisor& x, const Divisor& y) const {
    return lattice_.member(x - y).has_value();
}

std::vector<std::pair<std::size_t, std::size_t>>
RRStructure::lint_equivalent_generators() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < nu_.size(); ++i)
        for (std::size_t j = i + 1; j < nu_.size(); ++j)
            if (lattice_.member(nu_[i] - nu_[j])) pairs.emplace_back(i, j);
    return pairs;
}

} // namespace finrr
