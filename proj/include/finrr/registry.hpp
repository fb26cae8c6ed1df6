#pragma once

/**
 * @file registry.hpp
 * @brief Named built-in structures.
 *
 * Available names:
 *   two-vertex-p4         two-vertex graph, edge weight 4
 *   two-vertex-p<w>       two-vertex graph, any positive rational weight w
 *   three-vertex-134      three-vertex graph, weights w12=1, w13=3, w23=4
 *   nongraph-sec4         H=<(-4,4)>, nu=(2,-2), kappa=(0,0), g=1
 *   nongraph-fig4-printed kappa=(0,0), nu={(0,4),(1,3)}, H=<(-3,3)>, g=5;
 *                         violates deg(kappa)=2g-2, kept for diagnosis
 *   nongraph-fig4-repaired same with kappa=(1,7), which restores symmetry
 */

#include <string>
#include <vector>

#include "finrr/structure.hpp"

namespace finrr {

/// Canonical list of example names (the two-vertex family is listed once,
/// as two-vertex-p4).
std::vector<std::string> example_names();

bool is_example_name(const std::string& name);

/// Builds the named example; throws ParseError for unknown names.
RRStructure example_structure(const std::string& name);

} // namespace finrr
