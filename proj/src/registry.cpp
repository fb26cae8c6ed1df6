#include "finrr/registry.hpp"

#include "finrr/graph.hpp"

namespace finrr {

namespace {

const std::string kTwoVertexPrefix = "two-vertex-p";

RRStructure two_vertex(const Rational& p) {
    if (p.sign() <= 0) throw ParseError("two-vertex weight must be positive, got " + p.str());
    std::vector<std::vector<Rational>> w{{Rational(0), p}, {p, Rational(0)}};
    return to_structure(WeightedGraph::from_matrix(std::move(w)), 1);
}

RRStructure three_vertex_134() {
    std::vector<WeightedGraph::Edge> edges{
        {1, 2, Rational(1)}, {1, 3, Rational(3)}, {2, 3, Rational(4)}};
    return to_structure(WeightedGraph::from_edges(3, edges), 1);
}

RRStructure nongraph_sec4() {
    auto H = SubgroupLattice::build(2, {Divisor{Rational(-4), Rational(4)}});
    return RRStructure::build(2, Rational(1), Divisor{Rational(0), Rational(0)},
                              {Divisor{Rational(2), Rational(-2)}}, std::move(H));
}

RRStructure nongraph_fig4(bool repaired) {
    auto H = SubgroupLattice::build(2, {Divisor{Rational(-3), Rational(3)}});
    Divisor kappa = repaired ? Divisor{Rational(1), Rational(7)}
                             : Divisor{Rational(0), Rational(0)};
    return RRStructure::build(2, Rational(5), std::move(kappa),
                              {Divisor{Rational(0), Rational(4)}, Divisor{Rational(1), Rational(3)}},
                              std::move(H), /*allow_broken=*/!repaired);
}

} // namespace

std::vector<std::string> example_names() {
    return {"two-vertex-p4", "three-vertex-134", "nongraph-sec4", "nongraph-fig4-printed",
            "nongraph-fig4-repaired"};
}

bool is_example_name(const std::string& name) {
    if (name.rfind(kTwoVertexPrefix, 0) == 0) {
        try {
            Rational::parse(name.substr(kTwoVertexPrefix.size()));
            return true;
        } catch (const ParseError&) {
            return false;
        }
    }
    return name == "three-vertex-134" || name == "nongraph-sec4" ||
           name == "nongraph-fig4-printed" || name == "nongraph-fig4-repaired";
}

RRStructure example_structure(const std::string& name) {
    if (name.rfind(kTwoVertexPrefix, 0) == 0)
        return two_vertex(Rational::parse(name.substr(kTwoVertexPrefix.size())));
    if (name == "three-vertex-134") return three_vertex_134();
    if (name == "nongraph-sec4") return nongraph_sec4();
    if (name == "nongraph-fig4-printed") return nongraph_fig4(false);
    if (name == "nongraph-fig4-repaired") return nongraph_fig4(true);
    throw ParseError("unknown example: '" + name + "'");
}

} // namespace finrr
