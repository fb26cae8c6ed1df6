#include <doctest.h>

#include "finrr/graph.hpp"
#include "finrr/prng.hpp"
#include "finrr/registry.hpp"

using namespace finrr;

namespace {

Divisor D(const std::string& s) { return Divisor::parse(s); }
Rational Q(const std::string& s) { return Rational::parse(s); }

WeightedGraph two_vertex(const Rational& p) {
    return WeightedGraph::from_matrix({{Rational(0), p}, {p, Rational(0)}});
}

WeightedGraph three_vertex(const Rational& p, const Rational& q, const Rational& r) {
    return WeightedGraph::from_edges(3, {{1, 2, p}, {1, 3, q}, {2, 3, r}});
}

// Connected graph with random rational weights in [0, 5].
WeightedGraph random_graph(SplitMix64& rng, std::size_t max_n = 6) {
    while (true) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.range(0, static_cast<long>(max_n) - 2));
        std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const long den = rng.range(1, 4);
                const long num = rng.range(0, 5 * den);
                w[i][j] = w[j][i] = Rational(num, den);
            }
        try {
            return WeightedGraph::from_matrix(std::move(w));
        } catch (const GraphError&) {
            // disconnected draw; try again
        }
    }
}

} // namespace

TEST_CASE("laplacian generators") {
    CHECK(laplacian_generators(two_vertex(Rational(4))) == std::vector<Divisor>{D("4,-4")});
    CHECK(laplacian_generators(two_vertex(Q("5/2"))) == std::vector<Divisor>{D("5/2,-5/2")});

    auto gens = laplacian_generators(three_vertex(Rational(1), Rational(3), Rational(4)));
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == D("4,-1,-3"));
    CHECK(gens[1] == D("-1,5,-4"));
}

TEST_CASE("nu generators") {
    CHECK(nu_generators(two_vertex(Rational(4)), 1) == std::vector<Divisor>{D("3,-1")});
    CHECK(nu_generators(two_vertex(Q("3/2")), 1) == std::vector<Divisor>{D("1/2,-1")});

    auto nus = nu_generators(three_vertex(Rational(1), Rational(3), Rational(4)), 1);
    REQUIRE(nus.size() == 2);
    CHECK(nus[0] == D("-1,0,6"));
    CHECK(nus[1] == D("-1,4,2"));

    CHECK_THROWS_AS(nu_generators(two_vertex(Rational(1)), 3), GraphError);
}

TEST_CASE("nu generators deduplicate") {
    // with w23 = 0 both permutations produce the same nu
    auto nus = nu_generators(three_vertex(Rational(2), Rational(2), Rational(0)), 1);
    CHECK(nus.size() == 1);
    CHECK(nus[0] == D("-1,1,1"));
}

TEST_CASE("canonical divisor and genus") {
    CHECK(canonical_divisor(two_vertex(Rational(4))) == D("2,2"));
    CHECK(canonical_divisor(two_vertex(Q("7/3"))) == D("1/3,1/3"));
    CHECK(canonical_divisor(three_vertex(Rational(1), Rational(3), Rational(4))) == D("2,3,5"));

    CHECK(genus(two_vertex(Rational(4))) == Rational(3));
    CHECK(genus(two_vertex(Q("3/2"))) == Q("1/2"));
    CHECK(genus(three_vertex(Rational(1), Rational(3), Rational(4))) == Rational(6));
}

TEST_CASE("to_structure assembles the worked examples") {
    auto s = to_structure(two_vertex(Rational(4)), 1);
    CHECK(s.genus() == Rational(3));
    CHECK(s.kappa() == D("2,2"));
    CHECK(s.nu_generators() == std::vector<Divisor>{D("3,-1")});
    CHECK(s.lattice() == SubgroupLattice::build(2, {D("4,-4")}));
    CHECK(s.verify_symmetry().ok);

    auto t = to_structure(three_vertex(Rational(1), Rational(3), Rational(4)), 1);
    CHECK(t.genus() == Rational(6));
    CHECK(t.kappa() == D("2,3,5"));
    CHECK(t.lattice().rank() == 2);
    CHECK(t.verify_symmetry().ok);

    // p = 1: genus 0, degenerate but valid
    auto u = to_structure(two_vertex(Rational(1)), 1);
    CHECK(u.genus() == Rational(0));
    CHECK(u.kappa() == D("-1,-1"));
    CHECK(u.nu_generators() == std::vector<Divisor>{D("0,-1")});
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(WeightedGraph::from_matrix({{Rational(0), Rational(1)},
                                                {Rational(2), Rational(0)}}),
                    GraphError); // asymmetric
    CHECK_THROWS_AS(WeightedGraph::from_matrix({{Rational(1)}}), GraphError); // loop
    CHECK_THROWS_AS(WeightedGraph::from_matrix({{Rational(0), Rational(-1)},
                                                {Rational(-1), Rational(0)}}),
                    GraphError); // negative
    CHECK_THROWS_AS(WeightedGraph::from_edges(3, {{1, 2, Rational(1)}}), GraphError); // disconnected
    CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{1, 2, Rational(1)}, {2, 1, Rational(1)}}),
                    GraphError); // duplicate edge
    CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{1, 3, Rational(1)}}), GraphError); // range
    CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{1, 1, Rational(1)}}), GraphError); // loop

    // n > 10 is rejected for the factorial construction
    std::vector<WeightedGraph::Edge> path;
    for (std::size_t v = 1; v < 11; ++v) path.push_back({v, v + 1, Rational(1)});
    auto big = WeightedGraph::from_edges(11, path);
    CHECK_THROWS_AS(nu_generators(big, 1), TooManyVertices);
}

TEST_CASE("graph invariants on random graphs (seeded)") {
    SplitMix64 rng(555);
    for (int iter = 0; iter < 30; ++iter) {
        auto g = random_graph(rng);
        const std::size_t n = g.vertex_count();

        auto gens = laplacian_generators(g);
        REQUIRE(gens.size() == n - 1);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            CHECK(degree(gens[i]).is_zero());
            CHECK(gens[i][i].sign() >= 0);
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(gens[i][j].sign() <= 0);
        }

        const Rational target = genus(g) - Rational(1);
        for (const auto& nu : nu_generators(g, 1)) CHECK(degree(nu) == target);

        CHECK(to_structure(g, 1).verify_symmetry().ok);
    }
}

TEST_CASE("base vertex choice does not change ell (tested conjecture)") {
    SplitMix64 rng(777);
    auto g = three_vertex(Rational(1), Rational(3), Rational(4));
    auto s1 = to_structure(g, 1);
    auto s2 = to_structure(g, 2);
    auto s3 = to_structure(g, 3);
    for (int iter = 0; iter < 15; ++iter) {
        const Divisor x = sample_divisor(rng, 3, -6, 6);
        const Rational l1 = s1.ell(x);
        CHECK(l1 == s2.ell(x));
        CHECK(l1 == s3.ell(x));
    }

    for (int iter = 0; iter < 5; ++iter) {
        auto h = random_graph(rng, 4);
        auto a = to_structure(h, 1);
        auto b = to_structure(h, h.vertex_count());
        for (int pt = 0; pt < 6; ++pt) {
            const Divisor x = sample_divisor(rng, h.vertex_count(), -5, 5);
            CHECK(a.ell(x) == b.ell(x));
        }
    }
}
