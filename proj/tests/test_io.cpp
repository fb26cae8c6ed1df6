#include <doctest.h>

#include "finrr/io.hpp"
#include "finrr/registry.hpp"

using namespace finrr;

namespace {

Divisor D(const std::string& s) { return Divisor::parse(s); }

} // namespace

TEST_CASE("structure json round trip preserves everything") {
    for (const auto& name : example_names()) {
        auto s = example_structure(name);
        auto back = structure_from_json_text(structure_to_json_text(s));
        CHECK(back.dimension() == s.dimension());
        CHECK(back.genus() == s.genus());
        CHECK(back.kappa() == s.kappa());
        CHECK(back.nu_generators() == s.nu_generators());
        CHECK(back.lattice() == s.lattice());
        CHECK(back.lattice().generators() == s.lattice().generators()); // originals survive
        CHECK(back.allow_broken() == s.allow_broken());
    }
}

TEST_CASE("structure json parsing") {
    const std::string good = R"({"n": 2, "genus": "1", "kappa": ["0","0"],
        "nu_generators": [["2","-2"]], "H": [["-4","4"]]})";
    auto s = structure_from_json_text(good);
    CHECK(s.dimension() == 2);
    CHECK(s.genus() == Rational(1));
    CHECK(s.lattice().generators()[0] == D("-4,4"));

    // empty H is the trivial subgroup
    auto trivial = structure_from_json_text(
        R"({"n": 2, "genus": "1", "kappa": ["0","0"], "nu_generators": [["2","-2"]], "H": []})");
    CHECK(trivial.lattice().is_trivial());

    CHECK_THROWS_AS(structure_from_json_text("not json"), ParseError);
    CHECK_THROWS_AS(structure_from_json_text("{}"), ParseError);
    CHECK_THROWS_AS(structure_from_json_text(
        R"({"n": 2, "genus": "1", "kappa": ["0"], "nu_generators": [["2","-2"]], "H": []})"),
        ParseError); // kappa length
    CHECK_THROWS_AS(structure_from_json_text(
        R"({"n": 2, "genus": "1", "kappa": ["0","0"], "nu_generators": [], "H": []})"),
        ParseError); // no nu generators
    CHECK_THROWS_AS(structure_from_json_text(
        R"({"n": 2, "genus": "1", "kappa": ["0","x"], "nu_generators": [["2","-2"]], "H": []})"),
        ParseError); // bad rational
    CHECK_THROWS_AS(structure_from_json_text(
        R"({"n": 2, "genus": "1", "kappa": ["0","0"], "nu_generators": [["2","-2"]],
            "H": [["1","0"]]})"),
        NonZeroDegreeGenerator);
}

TEST_CASE("allow_broken gates the degree hypotheses") {
    const std::string printed = R"({"n": 2, "genus": "5", "kappa": ["0","0"],
        "nu_generators": [["0","4"],["1","3"]], "H": [["-3","3"]]})";
    CHECK_THROWS_AS(structure_from_json_text(printed), DegreeHypothesisError);

    const std::string flagged = R"({"n": 2, "genus": "5", "kappa": ["0","0"],
        "nu_generators": [["0","4"],["1","3"]], "H": [["-3","3"]], "allow_broken": true})";
    auto s = structure_from_json_text(flagged);
    CHECK(s.allow_broken());
    CHECK(!s.check_degrees().kappa_ok);
}

TEST_CASE("graph json parsing") {
    auto g = graph_from_json_text(R"({"n": 2, "edges": [[1, 2, "4"]]})");
    CHECK(g.vertex_count() == 2);
    CHECK(g.weight(0, 1) == Rational(4));
    CHECK(g.weight(1, 0) == Rational(4)); // symmetric closure

    CHECK_THROWS_AS(graph_from_json_text("[]"), ParseError);
    CHECK_THROWS_AS(graph_from_json_text(R"({"n": 2})"), ParseError);
    CHECK_THROWS_AS(graph_from_json_text(R"({"n": 2, "edges": [[1, 2]]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json_text(R"({"n": 2, "edges": [[1, 2, "4"], [2, 1, "4"]]})"),
                    GraphError); // duplicate after closure
    CHECK_THROWS_AS(graph_from_json_text(R"({"n": 2, "edges": [[1, 3, "4"]]})"), GraphError);
    CHECK_THROWS_AS(graph_from_json_text(R"({"n": 3, "edges": [[1, 2, "1"]]})"), GraphError);
}

TEST_CASE("registry") {
    auto names = example_names();
    CHECK(names.size() == 5);
    for (const auto& name : names) CHECK(is_example_name(name));

    CHECK(is_example_name("two-vertex-p7"));
    CHECK(is_example_name("two-vertex-p3/2"));
    CHECK(!is_example_name("two-vertex-pX"));
    CHECK(!is_example_name("unknown"));
    CHECK_THROWS_AS(example_structure("unknown"), ParseError);
    CHECK_THROWS_AS(example_structure("two-vertex-p0"), ParseError);
    CHECK_THROWS_AS(example_structure("two-vertex-p-2"), ParseError);

    auto half = example_structure("two-vertex-p3/2");
    CHECK(half.genus() == Rational(1, 2));
    CHECK(half.verify_symmetry().ok);

    // every built-in except the printed figure satisfies the hypotheses
    for (const auto& name : names) {
        auto s = example_structure(name);
        if (name == "nongraph-fig4-printed")
            CHECK(!s.check_degrees().ok());
        else
            CHECK(s.check_degrees().ok());
    }
}

TEST_CASE("file io errors") {
    CHECK_THROWS_AS(read_file("/nonexistent/file.json"), ParseError);
    CHECK_THROWS_AS(load_structure_file("/nonexistent/file.json"), ParseError);
}
