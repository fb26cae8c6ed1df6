#pragma once

/**
 * @file graph.hpp
 * @brief Edge-weighted graphs and the structures they induce.
 *
 * A WeightedGraph is a finite simple loopless graph with nonnegative
 * rational edge weights, connected on the support of its positive
 * weights. It induces a Riemann-Roch structure: H is spanned by the
 * first n-1 rows of the edge-weighted Laplacian, kappa(j) = deg(v_j) - 2,
 * g = 1 + sum of weights - n, and the nu-generators come from the
 * permutation construction rooted at a base vertex.
 */

#include <vector>

#include "finrr/structure.hpp"

namespace finrr {

class WeightedGraph {
public:
    /// Builds from a full weight matrix; must be symmetric with zero
    /// diagonal and nonnegative entries, and connected on positive weights.
    static WeightedGraph from_matrix(std::vector<std::vector<Rational>> weights);

    /// Builds from an edge list with 1-based endpoints; the symmetric
    /// closure is applied and duplicate edges are rejected.
    struct Edge {
        std::size_t u = 0, v = 0; // 1-based
        Rational weight;
    };
    static WeightedGraph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t vertex_count() const { return n_; }
    const Rational& weight(std::size_t i, std::size_t j) const { return w_[i][j]; }

    /// Sum of weights of edges incident to vertex i (0-based).
    Rational vertex_degree(std::size_t i) const;

private:
    WeightedGraph() = default;
    std::size_t n_ = 0;
    std::vector<std::vector<Rational>> w_;
};

/// Degree-zero generators h_1..h_{n-1} of the Laplacian image:
/// h_i(j) = deg(v_i) if i = j, -w_ij otherwise.
std::vector<Divisor> laplacian_generators(const WeightedGraph& g);

/// All nu's from permutations (j_1..j_n) with j_1 = base (1-based):
/// nu(j_1) = -1 and nu(j_l) = -1 + sum_{i<l} w(j_i, j_l). Exact duplicates
/// are dropped; output follows the lexicographic order of the generating
/// permutations. Capped at n <= 10.
std::vector<Divisor> nu_generators(const WeightedGraph& g, std::size_t base);

/// kappa(j) = deg(v_j) - 2.
Divisor canonical_divisor(const WeightedGraph& g);

/// g = 1 + sum_{i<j} w_ij - n; rational weights give rational genus.
Rational genus(const WeightedGraph& g);

/// Assembles the full structure for the given base vertex.
RRStructure to_structure(const WeightedGraph& g, std::size_t base);

} // namespace finrr
