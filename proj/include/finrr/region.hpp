#pragma once

/**
 * @file region.hpp
 * @brief Sampling ell over rational grids; CSV tables and SVG heatmaps.
 *
 * Grids are exact: point t of axis i is lo_i + t*(hi_i-lo_i)/(resolution-1).
 * Tables are row-major with the last axis varying fastest. SVG output is
 * limited to n = 2 and shades the cells where ell = 0; both emitters are
 * byte-deterministic for fixed input.
 */

#include <string>
#include <utility>
#include <vector>

#include "finrr/structure.hpp"

namespace finrr {

struct RegionSpec {
    std::vector<std::pair<Rational, Rational>> box; // closed [lo, hi] per axis
    std::size_t resolution = 2;                     // samples per axis, >= 2

    void validate() const;
    /// Exact grid coordinate t of the given axis.
    Rational grid_point(std::size_t axis, std::size_t t) const;
};

struct RegionTable {
    RegionSpec spec;
    std::vector<Divisor> points;  // row-major
    std::vector<Rational> values; // ell at each point
};

/// Evaluates ell on every grid point of the spec (dimension must match).
RegionTable sample_region(const RRStructure& s, const RegionSpec& spec);

/// CSV with header "x1,...,xn,ell"; rationals serialized as "a/b".
std::string emit_csv(const RegionTable& table);

/// Inverse of emit_csv: recovers the (point, value) rows.
std::pair<std::vector<Divisor>, std::vector<Rational>> parse_csv(const std::string& text);

/// SVG heatmap for n = 2: shades ell = 0 cells, draws axis lines through
/// the origin and tick marks at integer coordinates.
std::string emit_svg(const RegionTable& table);

} // namespace finrr
