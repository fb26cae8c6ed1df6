#pragma once

/**
 * @file io.hpp
 * @brief JSON file formats for structures and graphs.
 *
 * Structure file:
 *   {"n": int, "genus": "a/b", "kappa": ["a/b", ...],
 *    "nu_generators": [["a/b", ...], ...], "H": [["a/b", ...], ...],
 *    "allow_broken": bool (optional)}
 *
 * Graph file:
 *   {"n": int, "edges": [[i, j, "a/b"], ...]}   (1-based endpoints)
 *
 * All rationals are serialized as strings "a/b" or "a". An empty "H"
 * denotes the trivial subgroup. Malformed input throws ParseError.
 */

#include <string>

#include "finrr/graph.hpp"
#include "finrr/structure.hpp"

namespace finrr {

RRStructure structure_from_json_text(const std::string& text);
std::string structure_to_json_text(const RRStructure& s);

WeightedGraph graph_from_json_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

RRStructure load_structure_file(const std::string& path);
WeightedGraph load_graph_file(const std::string& path);

} // namespace finrr
