#include "finrr/lattice.hpp"

#include <algorithm>
#include <string>

namespace finrr {

namespace {

// Canonical column Hermite form, in place. Columns are reduced by
// unimodular column operations so that each surviving column has its
// first nonzero entry (the pivot) positive, pivots appear in strictly
// increasing rows, entries of earlier columns at a pivot row lie in
// [0, pivot), and all columns beyond the rank are zero.
// Returns the pivot row of each surviving column.
std::vector<std::size_t> hermite_reduce(std::vector<std::vector<Int>>& cols, std::size_t n) {
    std::vector<std::size_t> pivot_rows;
    std::size_t r = 0;
    for (std::size_t i = 0; i < n && r < cols.size(); ++i) {
        // Gather columns >= r with a nonzero entry in row i and combine
        // them until one remains.
        while (true) {
            std::size_t best = cols.size();
            for (std::size_t j = r; j < cols.size(); ++j) {
                if (cols[j][i] == 0) continue;
                if (best == cols.size() ||
                    mpz_cmpabs(cols[j][i].get_mpz_t(), cols[best][i].get_mpz_t()) < 0)
                    best = j;
            }
            if (best == cols.size()) break; // row i has no pivot
            std::swap(cols[r], cols[best]);
            bool others = false;
            for (std::size_t j = r + 1; j < cols.size(); ++j) {
                if (cols[j][i] == 0) continue;
                others = true;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[r][i].get_mpz_t());
                if (q != 0)
                    for (std::size_t row = 0; row < n; ++row) cols[j][row] -= q * cols[r][row];
            }
            if (!others) break;
        }
        if (cols[r][i] == 0) continue;
        if (cols[r][i] < 0)
            for (std::size_t row = 0; row < n; ++row) cols[r][row] = -cols[r][row];
        // Normalize earlier columns at this pivot row to [0, pivot).
        for (std::size_t j = 0; j < r; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[r][i].get_mpz_t());
            if (q != 0)
                for (std::size_t row = 0; row < n; ++row) cols[j][row] -= q * cols[r][row];
        }
        pivot_rows.push_back(i);
        ++r;
    }
    cols.resize(r);
    return pivot_rows;
}

// Inverse of a square rational matrix by Gauss-Jordan elimination.
// The Gram matrices passed in are positive definite, hence invertible.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const std::size_t k = a.size();
    std::vector<std::vector<Rational>> inv(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = Rational(1);
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && a[p][c].is_zero()) ++p;
        if (p == k) throw Error("invert: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational d = a[c][c];
        for (std::size_t j = 0; j < k; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < k; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace

SubgroupLattice SubgroupLattice::build(std::size_t n, std::vector<Divisor> generators,
                                       bool allow_empty) {
    if (n == 0) throw Error("build_lattice: dimension must be >= 1");
    if (generators.empty() && !allow_empty)
        throw EmptyGenerators("build_lattice: no generators (pass allow_empty for the trivial subgroup)");
    for (const auto& g : generators) {
        if (g.size() != n)
            throw LengthMismatch("build_lattice: generator of length " +
                                 std::to_string(g.size()) + " in dimension " + std::to_string(n));
        if (!degree(g).is_zero())
            throw NonZeroDegreeGenerator("build_lattice: generator " + g.str() +
                                         " has degree " + degree(g).str());
    }

    SubgroupLattice L;
    L.n_ = n;
    L.generators_ = std::move(generators);

    Int scale = 1;
    for (const auto& g : L.generators_)
        for (std::size_t i = 0; i < n; ++i)
            scale = lcm(scale, g[i].denominator());
    L.scale_ = scale;

    std::vector<std::vector<Int>> cols;
    cols.reserve(L.generators_.size());
    for (const auto& g : L.generators_) {
        std::vector<Int> col(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational scaled = g[i] * Rational(scale);
            col[i] = scaled.numerator(); // exact: scale clears every denominator
        }
        cols.push_back(std::move(col));
    }
    L.pivot_rows_ = hermite_reduce(cols, n);
    L.basis_ = std::move(cols);

    for (const auto& col : L.basis_) {
        std::vector<Rational> comps(n);
        for (std::size_t i = 0; i < n; ++i) comps[i] = Rational(col[i], scale);
        L.basis_divisors_.emplace_back(std::move(comps));
    }

    const std::size_t k = L.basis_.size();
    if (k > 0) {
        // Gram = B^T B over Z, then pinv(B/scale) = scale * Gram^{-1} B^T.
        std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                Int s = 0;
                for (std::size_t i = 0; i < n; ++i) s += L.basis_[a][i] * L.basis_[b][i];
                gram[a][b] = Rational(s);
            }
        auto gram_inv = invert(std::move(gram));
        L.pseudo_inverse_.assign(k, std::vector<Rational>(n));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t i = 0; i < n; ++i) {
                Rational s;
                for (std::size_t b = 0; b < k; ++b)
                    s += gram_inv[a][b] * Rational(L.basis_[b][i]);
                L.pseudo_inverse_[a][i] = s * Rational(scale);
            }
        for (std::size_t a = 0; a < k; ++a) {
            Rational row_sum;
            for (std::size_t i = 0; i < n; ++i) row_sum += abs(L.pseudo_inverse_[a][i]);
            L.coeff_bound_ = max(L.coeff_bound_, row_sum);
        }
    }
    return L;
}

Int SubgroupLattice::coeff_box_bound(const Rational& radius) const {
    if (radius.sign() < 0) throw Error("coeff_box_bound: negative radius");
    return (coeff_bound_ * radius).floor();
}

Divisor SubgroupLattice::from_coefficients(const std::vector<Int>& m) const {
    if (m.size() != basis_.size()) throw Error("from_coefficients: wrong coefficient count");
    std::vector<Int> w(n_, Int(0));
    for (std::size_t c = 0; c < m.size(); ++c)
        for (std::size_t i = 0; i < n_; ++i) w[i] += m[c] * basis_[c][i];
    std::vector<Rational> comps(n_);
    for (std::size_t i = 0; i < n_; ++i) comps[i] = Rational(w[i], scale_);
    return Divisor(std::move(comps));
}

std::optional<std::vector<Int>> SubgroupLattice::member(const Divisor& b) const {
    if (b.size() != n_)
        throw LengthMismatch("member: divisor length " + std::to_string(b.size()) +
                             " in dimension " + std::to_string(n_));
    // b is in H iff scale*b is an integer vector in the Z-span of the
    // scaled basis. The Hermite form solves by forward substitution.
    std::vector<Int> v(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Rational scaled = b[i] * Rational(scale_);
        if (!scaled.is_integer()) return std::nullopt;
        v[i] = scaled.numerator();
    }
    std::vector<Int> m(basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
        const std::size_t p = pivot_rows_[c];
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[p].get_mpz_t(), basis_[c][p].get_mpz_t());
        if (r != 0) return std::nullopt;
        m[c] = q;
        if (q != 0)
            for (std::size_t i = p; i < n_; ++i) v[i] -= q * basis_[c][i];
    }
    for (std::size_t i = 0; i < n_; ++i)
        if (v[i] != 0) return std::nullopt;
    return m;
}

std::vector<Divisor> SubgroupLattice::enumerate_ball(const Rational& radius) const {
    if (radius.sign() < 0) throw Error("enumerate_ball: negative radius");
    std::vector<Divisor> out;
    if (basis_.empty()) {
        out.push_back(zero_divisor(n_));
        return out;
    }
    const Int bound = coeff_box_bound(radius);
    const Rational scaled_radius = radius * Rational(scale_);
    const std::size_t k = basis_.size();

    // Depth-first over coefficient vectors in [-bound, bound]^k, carrying
    // the partial integer combination; lexicographic order falls out.
    std::vector<Int> m(k);
    std::vector<Int> w(n_, Int(0));
    auto in_ball = [&]() {
        for (std::size_t i = 0; i < n_; ++i) {
            Int a = ::abs(w[i]);
            if (Rational(a) > scaled_radius) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == k) {
            if (in_ball()) {
                std::vector<Rational> comps(n_);
                for (std::size_t i = 0; i < n_; ++i) comps[i] = Rational(w[i], scale_);
                out.emplace_back(std::move(comps));
            }
            return;
        }
        for (Int t = -bound; t <= bound; ++t) {
            m[c] = t;
            for (std::size_t i = 0; i < n_; ++i) w[i] += t * basis_[c][i];
            self(self, c + 1);
            for (std::size_t i = 0; i < n_; ++i) w[i] -= t * basis_[c][i];
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Int> SubgroupLattice::nearest_coefficients(const Divisor& y) const {
    if (y.size() != n_)
        throw LengthMismatch("nearest_coefficients: divisor length " + std::to_string(y.size()) +
                             " in dimension " + std::to_string(n_));
    std::vector<Int> m(basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
        Rational t;
        for (std::size_t i = 0; i < n_; ++i) t += pseudo_inverse_[c][i] * y[i];
        m[c] = t.round();
    }
    return m;
}

} // namespace finrr
