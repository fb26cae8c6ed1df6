#include "finrr/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace finrr {

namespace {

void check_connected(const std::vector<std::vector<Rational>>& w) {
    const std::size_t n = w.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v] && w[u][v].sign() > 0) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw GraphError("graph is not connected on its positive-weight support");
}

} // namespace

WeightedGraph WeightedGraph::from_matrix(std::vector<std::vector<Rational>> weights) {
    const std::size_t n = weights.size();
    if (n == 0) throw GraphError("graph must have at least one vertex");
    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i].size() != n) throw GraphError("weight matrix is not square");
        if (!weights[i][i].is_zero())
            throw GraphError("loop weight at vertex " + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j) {
            if (weights[i][j].sign() < 0)
                throw GraphError("negative weight at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
            if (weights[i][j] != weights[j][i])
                throw GraphError("asymmetric weights at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
        }
    }
    if (n > 1) check_connected(weights);
    WeightedGraph g;
    g.n_ = n;
    g.w_ = std::move(weights);
    return g;
}

WeightedGraph WeightedGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (const auto& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        if (e.u == e.v) throw GraphError("loop edge at vertex " + std::to_string(e.u));
        auto key = std::minmax(e.u, e.v);
        if (!used.insert(key).second)
            throw GraphError("duplicate edge (" + std::to_string(key.first) + "," +
                             std::to_string(key.second) + ")");
        w[e.u - 1][e.v - 1] = e.weight;
        w[e.v - 1][e.u - 1] = e.weight;
    }
    return from_matrix(std::move(w));
}

Rational WeightedGraph::vertex_degree(std::size_t i) const {
    Rational d;
    for (std::size_t j = 0; j < n_; ++j) d += w_[i][j];
    return d;
}

std::vector<Divisor> laplacian_generators(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Divisor> gens;
    gens.reserve(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = (i == j) ? g.vertex_degree(i) : -g.weight(i, j);
        gens.emplace_back(std::move(row));
    }
    return gens;
}

std::vector<Divisor> nu_generators(const WeightedGraph& g, std::size_t base) {
    const std::size_t n = g.vertex_count();
    if (base < 1 || base > n)
        throw GraphError("base vertex " + std::to_string(base) + " out of range");
    if (n > 10)
        throw TooManyVertices("permutation construction capped at 10 vertices, got " +
                              std::to_string(n));

    std::vector<std::size_t> rest;
    for (std::size_t v = 1; v <= n; ++v)
        if (v != base) rest.push_back(v);

    std::vector<Divisor> out;
    std::set<Divisor> seen;
    std::vector<std::size_t> perm(n);
    perm[0] = base;
    do {
        std::copy(rest.begin(), rest.end(), perm.begin() + 1);
        std::vector<Rational> nu(n);
        nu[base - 1] = Rational(-1);
        for (std::size_t l = 1; l < n; ++l) {
            Rational v(-1);
            for (std::size_t i = 0; i < l; ++i) v += g.weight(perm[i] - 1, perm[l] - 1);
            nu[perm[l] - 1] = v;
        }
        Divisor d(std::move(nu));
        if (seen.insert(d).second) out.push_back(std::move(d));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

Divisor canonical_divisor(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Rational> k(n);
    for (std::size_t j = 0; j < n; ++j) k[j] = g.vertex_degree(j) - Rational(2);
    return Divisor(std::move(k));
}

Rational genus(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    Rational sum;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) sum += g.weight(i, j);
    return Rational(1) + sum - Rational(static_cast<long>(n));
}

RRStructure to_structure(const WeightedGraph& g, std::size_t base) {
    const std::size_t n = g.vertex_count();
    auto lattice = SubgroupLattice::build(n, laplacian_generators(g), /*allow_empty=*/n == 1);
    return RRStructure::build(n, genus(g), canonical_divisor(g), nu_generators(g, base),
                              std::move(lattice));
}

} // namespace finrr
