#include "finrr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace finrr {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

Divisor divisor_from_json(const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n)
        throw ParseError(std::string(what) + " must be an array of " + std::to_string(n) +
                         " rationals");
    std::vector<Rational> comps;
    comps.reserve(n);
    for (const auto& c : j) comps.push_back(rational_from_json(c));
    return Divisor(std::move(comps));
}

ordered_json divisor_to_json(const Divisor& d) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < d.size(); ++i) arr.push_back(d[i].str());
    return arr;
}

} // namespace

RRStructure structure_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("structure json: ") + e.what());
    }
    try {
        if (!j.is_object()) throw ParseError("structure json: not an object");
        if (!j.contains("n") || !j["n"].is_number_unsigned())
            throw ParseError("structure json: missing positive integer 'n'");
        const std::size_t n = j["n"].get<std::size_t>();
        if (n == 0) throw ParseError("structure json: n must be >= 1");
        if (!j.contains("genus") || !j.contains("kappa") || !j.contains("nu_generators") ||
            !j.contains("H"))
            throw ParseError("structure json: requires genus, kappa, nu_generators, H");

        Rational g = rational_from_json(j["genus"]);
        Divisor kappa = divisor_from_json(j["kappa"], n, "kappa");

        if (!j["nu_generators"].is_array() || j["nu_generators"].empty())
            throw ParseError("structure json: nu_generators must be a nonempty array");
        std::vector<Divisor> nus;
        for (const auto& entry : j["nu_generators"])
            nus.push_back(divisor_from_json(entry, n, "nu_generators entry"));

        if (!j["H"].is_array()) throw ParseError("structure json: H must be an array");
        std::vector<Divisor> gens;
        for (const auto& entry : j["H"])
            gens.push_back(divisor_from_json(entry, n, "H entry"));

        bool allow_broken = false;
        if (j.contains("allow_broken")) {
            if (!j["allow_broken"].is_boolean())
                throw ParseError("structure json: allow_broken must be a boolean");
            allow_broken = j["allow_broken"].get<bool>();
        }

        // An explicit empty H means the trivial subgroup.
        auto lattice = SubgroupLattice::build(n, std::move(gens), /*allow_empty=*/true);
        return RRStructure::build(n, std::move(g), std::move(kappa), std::move(nus),
                                  std::move(lattice), allow_broken);
    } catch (const json::exception& e) {
        throw ParseError(std::string("structure json: ") + e.what());
    }
}

std::string structure_to_json_text(const RRStructure& s) {
    ordered_json j;
    j["n"] = s.dimension();
    j["genus"] = s.genus().str();
    j["kappa"] = divisor_to_json(s.kappa());
    ordered_json nus = ordered_json::array();
    for (const auto& nu : s.nu_generators()) nus.push_back(divisor_to_json(nu));
    j["nu_generators"] = std::move(nus);
    ordered_json gens = ordered_json::array();
    for (const auto& g : s.lattice().generators()) gens.push_back(divisor_to_json(g));
    j["H"] = std::move(gens);
    if (s.allow_broken()) j["allow_broken"] = true;
    return j.dump(2) + "\n";
}

WeightedGraph graph_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
    try {
        if (!j.is_object()) throw ParseError("graph json: not an object");
        if (!j.contains("n") || !j["n"].is_number_unsigned())
            throw ParseError("graph json: missing positive integer 'n'");
        const std::size_t n = j["n"].get<std::size_t>();
        if (!j.contains("edges") || !j["edges"].is_array())
            throw ParseError("graph json: missing 'edges' array");
        std::vector<WeightedGraph::Edge> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
                !e[1].is_number_unsigned())
                throw ParseError("graph json: edge must be [i, j, \"weight\"], got " + e.dump());
            edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                             rational_from_json(e[2])});
        }
        return WeightedGraph::from_edges(n, edges);
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

RRStructure load_structure_file(const std::string& path) {
    return structure_from_json_text(read_file(path));
}

WeightedGraph load_graph_file(const std::string& path) {
    return graph_from_json_text(read_file(path));
}

} // namespace finrr
