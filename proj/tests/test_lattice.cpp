#include <doctest.h>

#include <algorithm>

#include "finrr/lattice.hpp"
#include "finrr/prng.hpp"
#include "oracles.hpp"

using namespace finrr;

namespace {

Divisor D(const std::string& s) { return Divisor::parse(s); }

SubgroupLattice span_of(std::initializer_list<const char*> gens, std::size_t n) {
    std::vector<Divisor> v;
    for (const char* g : gens) v.push_back(D(g));
    return SubgroupLattice::build(n, std::move(v));
}

// Random degree-zero integer vector with entries in [-9, 9].
Divisor random_generator(SplitMix64& rng, std::size_t n) {
    while (true) {
        std::vector<Rational> comps(n);
        long sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            long e = rng.range(-9, 9);
            comps[i] = Rational(e);
            sum += e;
        }
        if (sum < -9 || sum > 9) continue;
        comps[n - 1] = Rational(-sum);
        return Divisor(std::move(comps));
    }
}

} // namespace

TEST_CASE("build: paper generators") {
    auto L = span_of({"-4,4"}, 2);
    CHECK(L.rank() == 1);
    CHECK(L.basis()[0] == D("4,-4")); // canonical form has a positive pivot
    CHECK(L.generators()[0] == D("-4,4"));

    auto L3 = span_of({"4,-1,-3", "-1,5,-4"}, 3);
    CHECK(L3.rank() == 2);
    for (const auto& b : L3.basis()) CHECK(degree(b).is_zero());
}

TEST_CASE("build: rejects nonzero-degree generators") {
    CHECK_THROWS_AS(span_of({"1,0"}, 2), NonZeroDegreeGenerator);
    CHECK_THROWS_AS(span_of({"0,0", "1,-2"}, 2), NonZeroDegreeGenerator);
}

TEST_CASE("build: empty generators only by request") {
    CHECK_THROWS_AS(SubgroupLattice::build(2, {}), EmptyGenerators);
    auto trivial = SubgroupLattice::build(2, {}, /*allow_empty=*/true);
    CHECK(trivial.is_trivial());
    CHECK(trivial.member(D("0,0")).has_value());
    CHECK(!trivial.member(D("1,-1")).has_value());
    auto ball = trivial.enumerate_ball(Rational(5));
    REQUIRE(ball.size() == 1);
    CHECK(ball[0] == D("0,0"));
}

TEST_CASE("build: dependent and rational generators reduce") {
    // (2,-2) and (3,-3) span (1,-1)
    auto L = span_of({"2,-2", "3,-3"}, 2);
    CHECK(L.rank() == 1);
    CHECK(L.basis()[0] == D("1,-1"));

    auto Lq = span_of({"1/2,-1/2"}, 2);
    CHECK(Lq.scale() == 2);
    CHECK(Lq.member(D("3/2,-3/2")).has_value());
    CHECK(!Lq.member(D("1/3,-1/3")).has_value());
}

TEST_CASE("member: section-4 non-membership certificates") {
    auto L = span_of({"-4,4"}, 2);
    CHECK(!L.member(D("2,2")).has_value());
    CHECK(!L.member(D("1,1")).has_value());

    auto m = span_of({"4,-4"}, 2).member(D("3,-1") - D("-1,3"));
    REQUIRE(m.has_value());
    CHECK(m->size() == 1);
    CHECK((*m)[0] == 1);

    auto z = L.member(D("0,0"));
    REQUIRE(z.has_value());
    CHECK((*z)[0] == 0);

    CHECK_THROWS_AS(L.member(D("1,2,3")), LengthMismatch);
}

TEST_CASE("member witness reconstructs the element") {
    auto L = span_of({"4,-1,-3", "-1,5,-4"}, 3);
    const Divisor target = Rational(2) * D("4,-1,-3") - Rational(3) * D("-1,5,-4");
    auto m = L.member(target);
    REQUIRE(m.has_value());
    CHECK(L.from_coefficients(*m) == target);
}

TEST_CASE("enumerate_ball: examples") {
    auto L4 = span_of({"-4,4"}, 2);
    auto b0 = L4.enumerate_ball(Rational(0));
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == D("0,0"));

    auto b9 = L4.enumerate_ball(Rational(9));
    CHECK(b9.size() == 5);
    for (const char* h : {"-8,8", "-4,4", "0,0", "4,-4", "8,-8"})
        CHECK(std::count(b9.begin(), b9.end(), D(h)) == 1);

    auto b3 = span_of({"-3,3"}, 2).enumerate_ball(Rational(3));
    CHECK(b3.size() == 3);

    CHECK_THROWS_AS(L4.enumerate_ball(Rational(-1)), Error);
}

TEST_CASE("lattice properties (seeded random lattices)") {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.range(0, 2)); // n in [2,4]
        const std::size_t count = 1 + static_cast<std::size_t>(rng.range(0, 1));
        std::vector<Divisor> gens;
        for (std::size_t c = 0; c < count; ++c) gens.push_back(random_generator(rng, n));
        auto L = SubgroupLattice::build(n, gens);

        for (const auto& g : gens) CHECK(L.member(g).has_value());
        for (const auto& b : L.scaled_basis()) {
            Int sum = 0;
            for (const auto& e : b) sum += e;
            CHECK(sum == 0);
        }

        // subgroup closure on sampled pairs
        const Divisor a = L.from_coefficients(L.nearest_coefficients(
            sample_divisor(rng, n, -6, 6)));
        const Divisor b = L.from_coefficients(L.nearest_coefficients(
            sample_divisor(rng, n, -6, 6)));
        CHECK(L.member(a + b).has_value());
        CHECK(L.member(a - b).has_value());

        const Rational r1(rng.range(0, 6));
        const Rational r2 = r1 + Rational(rng.range(0, 5));
        auto ball1 = L.enumerate_ball(r1);
        auto ball2 = L.enumerate_ball(r2);

        CHECK(std::count(ball1.begin(), ball1.end(), zero_divisor(n)) == 1);
        for (const auto& h : ball1) {
            CHECK(std::count(ball1.begin(), ball1.end(), -h) == 1);
            CHECK(std::count(ball2.begin(), ball2.end(), h) == 1); // nesting
            CHECK(L.member(h).has_value());
            CHECK(inf_norm(h) <= r1);
        }

        // oracle: doubled coefficient box scan finds exactly the same set
        auto expected = test::scan_ball(L, r1);
        std::sort(expected.begin(), expected.end());
        auto got = ball1;
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("coefficient bound certifies the box") {
    SplitMix64 rng(123);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.range(0, 2));
        auto L = SubgroupLattice::build(n, {random_generator(rng, n)});
        const Rational r(rng.range(1, 8));
        const Int box = L.coeff_box_bound(r);
        for (const auto& h : L.enumerate_ball(r)) {
            auto m = L.member(h);
            REQUIRE(m.has_value());
            for (const auto& c : *m) {
                Int a = ::abs(c);
                CHECK(a <= box);
            }
        }
    }
}
