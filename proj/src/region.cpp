#include "finrr/region.hpp"

#include <sstream>
#include <string>

namespace finrr {

void RegionSpec::validate() const {
    if (box.empty()) throw RegionError("region: empty box");
    if (resolution < 2) throw RegionError("region: resolution must be >= 2");
    for (const auto& [lo, hi] : box)
        if (!(lo < hi))
            throw RegionError("region: interval [" + lo.str() + "," + hi.str() + "] is empty");
}

Rational RegionSpec::grid_point(std::size_t axis, std::size_t t) const {
    const auto& [lo, hi] = box[axis];
    return lo + Rational(static_cast<long>(t)) * (hi - lo) /
                    Rational(static_cast<long>(resolution) - 1);
}

RegionTable sample_region(const RRStructure& s, const RegionSpec& spec) {
    spec.validate();
    if (spec.box.size() != s.dimension())
        throw RegionError("region: box dimension " + std::to_string(spec.box.size()) +
                          ", structure dimension " + std::to_string(s.dimension()));
    const std::size_t n = spec.box.size();
    const std::size_t r = spec.resolution;

    // Precompute per-axis grids once; the walk is a row-major odometer.
    std::vector<std::vector<Rational>> axes(n);
    for (std::size_t a = 0; a < n; ++a) {
        axes[a].reserve(r);
        for (std::size_t t = 0; t < r; ++t) axes[a].push_back(spec.grid_point(a, t));
    }

    RegionTable table;
    table.spec = spec;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Rational> comps(n);
        for (std::size_t a = 0; a < n; ++a) comps[a] = axes[a][idx[a]];
        Divisor p(std::move(comps));
        table.values.push_back(s.ell(p));
        table.points.push_back(std::move(p));

        std::size_t a = n;
        while (a > 0) {
            --a;
            if (++idx[a] < r) break;
            idx[a] = 0;
            if (a == 0) return table;
        }
    }
}

std::string emit_csv(const RegionTable& table) {
    const std::size_t n = table.spec.box.size();
    std::string out;
    for (std::size_t a = 0; a < n; ++a) out += "x" + std::to_string(a + 1) + ",";
    out += "ell\n";
    for (std::size_t row = 0; row < table.points.size(); ++row) {
        out += table.points[row].str();
        out += ',';
        out += table.values[row].str();
        out += '\n';
    }
    return out;
}

std::pair<std::vector<Divisor>, std::vector<Rational>> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("csv: empty input");
    if (line.rfind("x1,", 0) != 0 ||
        line.size() < 4 || line.substr(line.size() - 4) != ",ell")
        throw ParseError("csv: bad header '" + line + "'");

    std::vector<Divisor> points;
    std::vector<Rational> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cut = line.rfind(',');
        if (cut == std::string::npos) throw ParseError("csv: bad row '" + line + "'");
        points.push_back(Divisor::parse(line.substr(0, cut)));
        values.push_back(Rational::parse(line.substr(cut + 1)));
    }
    return {std::move(points), std::move(values)};
}

namespace {

constexpr long kMargin = 40;
constexpr long kPlot = 520;

// Pixel position of rational coordinate v on [lo_edge, hi_edge], exact
// rational arithmetic rounded to the nearest integer pixel.
long to_px(const Rational& v, const Rational& lo_edge, const Rational& hi_edge, bool flip) {
    Rational frac = (v - lo_edge) / (hi_edge - lo_edge);
    if (flip) frac = Rational(1) - frac;
    Rational px = Rational(kMargin) + frac * Rational(kPlot);
    return px.round().get_si();
}

} // namespace

std::string emit_svg(const RegionTable& table) {
    const std::size_t n = table.spec.box.size();
    if (n != 2) throw RegionError("svg: rendering requires n = 2, got n = " + std::to_string(n));
    const std::size_t r = table.spec.resolution;

    // Cell edges: midpoints between consecutive grid points, extended by a
    // half step at both ends; adjacent cells share edges so rounding never
    // opens gaps.
    std::vector<std::vector<Rational>> edges(2);
    for (std::size_t a = 0; a < 2; ++a) {
        const auto& [lo, hi] = table.spec.box[a];
        const Rational step = (hi - lo) / Rational(static_cast<long>(r) - 1);
        const Rational half = step / Rational(2);
        edges[a].push_back(lo - half);
        for (std::size_t t = 1; t < r; ++t)
            edges[a].push_back((table.spec.grid_point(a, t - 1) + table.spec.grid_point(a, t)) /
                               Rational(2));
        edges[a].push_back(hi + half);
    }
    const Rational x_lo = edges[0].front(), x_hi = edges[0].back();
    const Rational y_lo = edges[1].front(), y_hi = edges[1].back();
    auto px = [&](const Rational& v) { return to_px(v, x_lo, x_hi, false); };
    auto py = [&](const Rational& v) { return to_px(v, y_lo, y_hi, true); };

    std::ostringstream svg;
    const long total = 2 * kMargin + kPlot;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\""
        << total << "\" viewBox=\"0 0 " << total << " " << total << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << total << "\" height=\"" << total
        << "\" fill=\"white\"/>\n";

    // shaded ell = 0 cells (points are row-major: axis 0 slowest)
    for (std::size_t s0 = 0; s0 < r; ++s0)
        for (std::size_t t = 0; t < r; ++t) {
            if (!table.values[s0 * r + t].is_zero()) continue;
            const long x0 = px(edges[0][s0]), x1 = px(edges[0][s0 + 1]);
            const long y1 = py(edges[1][t]), y0 = py(edges[1][t + 1]);
            svg << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << (x1 - x0)
                << "\" height=\"" << (y1 - y0) << "\" fill=\"#c8c8c8\"/>\n";
        }

    // axis lines through the origin, when visible
    if (x_lo.sign() <= 0 && Rational(0) <= x_hi)
        svg << "<line x1=\"" << px(Rational(0)) << "\" y1=\"" << kMargin << "\" x2=\""
            << px(Rational(0)) << "\" y2=\"" << kMargin + kPlot
            << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    if (y_lo.sign() <= 0 && Rational(0) <= y_hi)
        svg << "<line x1=\"" << kMargin << "\" y1=\"" << py(Rational(0)) << "\" x2=\""
            << kMargin + kPlot << "\" y2=\"" << py(Rational(0))
            << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";

    // frame and integer ticks with labels along the bottom and left
    svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kPlot
        << "\" height=\"" << kPlot << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
    for (Int z = x_lo.ceil(); z <= x_hi.floor(); ++z) {
        const long x = px(Rational(z));
        svg << "<line x1=\"" << x << "\" y1=\"" << kMargin + kPlot << "\" x2=\"" << x << "\" y2=\""
            << kMargin + kPlot + 5 << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << kMargin + kPlot + 16
            << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" << z
            << "</text>\n";
    }
    for (Int z = y_lo.ceil(); z <= y_hi.floor(); ++z) {
        const long y = py(Rational(z));
        svg << "<line x1=\"" << kMargin - 5 << "\" y1=\"" << y << "\" x2=\"" << kMargin
            << "\" y2=\"" << y << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << kMargin - 8 << "\" y=\"" << y + 3
            << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"end\">" << z
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace finrr
