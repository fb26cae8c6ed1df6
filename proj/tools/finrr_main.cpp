// finrr: exact Riemann-Roch computations on finite sets.
//
// Subcommands: verify | ell | rr-check | from-graph | region | example.
// Exit codes: 0 success/verified, 1 property violation, 2 usage or parse
// error. Structure arguments accept either a JSON file path or a built-in
// example name (see `finrr example --list`).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finrr/io.hpp"
#include "finrr/prng.hpp"
#include "finrr/region.hpp"
#include "finrr/registry.hpp"

namespace {

using namespace finrr;

RRStructure load_structure_arg(const std::string& arg) {
    if (is_example_name(arg)) return example_structure(arg);
    return load_structure_file(arg);
}

std::pair<Rational, Rational> parse_interval(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw ParseError("interval must be 'lo..hi', got '" + text + "'");
    Rational lo = Rational::parse(text.substr(0, pos));
    Rational hi = Rational::parse(text.substr(pos + 2));
    if (!(lo < hi)) throw ParseError("interval '" + text + "' is empty");
    return {std::move(lo), std::move(hi)};
}

std::vector<std::pair<Rational, Rational>> parse_box(const std::string& text, std::size_t n) {
    std::vector<std::pair<Rational, Rational>> box;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        box.push_back(parse_interval(text.substr(start, comma - start)));
        start = comma + 1;
    }
    if (box.size() == 1 && n > 1) box.assign(n, box.front());
    if (box.size() != n)
        throw ParseError("box has " + std::to_string(box.size()) + " intervals, expected " +
                         std::to_string(n));
    return box;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::string divisor_list(const std::vector<Int>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += m[i].get_str();
    }
    return s + "]";
}

// Integer numerator range of a sampling interval at the given denominator.
std::pair<long, long> numerator_range(const std::pair<Rational, Rational>& interval,
                                      long denominator) {
    const Rational d(denominator);
    long lo = (interval.first * d).ceil().get_si();
    long hi = (interval.second * d).floor().get_si();
    if (lo > hi) throw ParseError("no sample points with denominator " +
                                  std::to_string(denominator) + " in the box");
    return {lo, hi};
}

struct RRCheckOutcome {
    std::size_t violations = 0;
    Rational max_abs_residual;
    std::optional<Divisor> first_counterexample;
};

RRCheckOutcome run_rr_samples(const RRStructure& s, std::size_t samples, std::uint64_t seed,
                              const std::pair<Rational, Rational>& interval, long denominator) {
    auto [lo, hi] = numerator_range(interval, denominator);
    SplitMix64 rng(seed);
    RRCheckOutcome outcome;
    for (std::size_t i = 0; i < samples; ++i) {
        Divisor x = sample_divisor(rng, s.dimension(), lo, hi, denominator);
        Rational r = s.rr_residual(x);
        outcome.max_abs_residual = max(outcome.max_abs_residual, abs(r));
        if (!r.is_zero()) {
            ++outcome.violations;
            if (!outcome.first_counterexample) outcome.first_counterexample = std::move(x);
        }
    }
    return outcome;
}

// Theorem-style report for n = 2: does any two-vertex graph (edge weight p,
// kappa = (p-2,p-2), nu ~ (p-1,-1), g = p-1) induce this structure?
void report_two_vertex_pattern(const RRStructure& s, std::ostream& os) {
    os << "two-vertex graph pattern (n=2):\n";
    const auto& L = s.lattice();
    if (L.rank() != 1) {
        os << "  H has rank " << L.rank() << ", not the rank-1 span <(p,-p)> of a graph Laplacian\n";
        os << "  => no two-vertex graph reproduces this structure\n";
        return;
    }
    const Rational p = L.basis()[0][0]; // canonical basis vector is (p,-p), p > 0
    os << "  H = <(" << p << "," << (-p) << ")> gives candidate edge weight p = " << p << "\n";

    bool all_ok = true;
    const Rational graph_genus = p - Rational(1);
    if (s.genus() == graph_genus) {
        os << "  genus " << s.genus() << " == p-1: ok\n";
    } else {
        os << "  genus mismatch: structure has g = " << s.genus() << ", graph needs p-1 = "
           << graph_genus << "\n";
        all_ok = false;
    }

    const Divisor graph_kappa{p - Rational(2), p - Rational(2)};
    const Divisor kappa_diff = graph_kappa - s.kappa();
    if (auto m = L.member(kappa_diff)) {
        os << "  kappa ~ (" << graph_kappa << "): difference (" << kappa_diff
           << ") in H with m = " << divisor_list(*m) << "\n";
    } else {
        os << "  kappa mismatch: (" << graph_kappa << ") - (" << s.kappa() << ") = ("
           << kappa_diff << ") not in H (no integer m)\n";
        all_ok = false;
    }

    const Divisor graph_nu{p - Rational(1), Rational(-1)};
    bool nu_found = false;
    for (const auto& nu : s.nu_generators()) {
        const Divisor nu_diff = graph_nu - nu;
        if (auto m = L.member(nu_diff)) {
            os << "  nu ~ (" << graph_nu << "): difference (" << nu_diff << ") in H with m = "
               << divisor_list(*m) << "\n";
            nu_found = true;
            break;
        }
    }
    if (!nu_found) {
        for (const auto& nu : s.nu_generators()) {
            const Divisor nu_diff = graph_nu - nu;
            os << "  nu mismatch: (" << graph_nu << ") - (" << nu << ") = (" << nu_diff
               << ") not in H (no integer m)\n";
        }
        all_ok = false;
    }

    if (all_ok)
        os << "  => matches the two-vertex graph with p = " << p << "\n";
    else
        os << "  => no two-vertex graph parameters reproduce this structure\n";
}

int cmd_verify(const std::string& structure_arg, std::size_t samples, std::uint64_t seed,
               const std::string& box_text) {
    RRStructure s = load_structure_arg(structure_arg);
    std::ostream& os = std::cout;
    os << "structure: " << structure_arg << "  (n=" << s.dimension() << ", g=" << s.genus()
       << ", " << s.nu_generators().size() << " nu-generator(s), H rank " << s.lattice().rank()
       << ")\n";

    auto degrees = s.check_degrees();
    os << "degree hypotheses:\n";
    os << "  deg(kappa) = " << degree(s.kappa()) << ", 2g-2 = "
       << (s.genus() * Rational(2) - Rational(2)) << ": " << (degrees.kappa_ok ? "ok" : "VIOLATED")
       << "\n";
    for (std::size_t i = 0; i < s.nu_generators().size(); ++i)
        os << "  deg(nu[" << i << "]) = " << degree(s.nu_generators()[i]) << ", g-1 = "
           << (s.genus() - Rational(1)) << ": " << (degrees.nu_ok[i] ? "ok" : "VIOLATED") << "\n";

    auto symmetry = s.verify_symmetry();
    os << "symmetry condition:\n";
    for (const auto& e : symmetry.entries) {
        os << "  kappa - nu[" << e.nu_index << "] = ("
           << (s.kappa() - s.nu_generators()[e.nu_index]) << "): ";
        if (e.partner)
            os << "~ nu[" << *e.partner << "] with m = " << divisor_list(e.coefficients) << "\n";
        else
            os << "not equivalent to any generator: VIOLATED\n";
    }

    for (auto [i, j] : s.lint_equivalent_generators())
        os << "note: nu[" << i << "] ~ nu[" << j << "] (redundant generators, same orbit)\n";

    const auto interval = parse_interval(box_text);
    auto rr = run_rr_samples(s, samples, seed, interval, 1);
    os << "rr spot-check: " << samples << " samples, box [" << interval.first << ","
       << interval.second << "], seed " << seed << ": ";
    if (rr.violations == 0)
        os << "all residuals exactly 0\n";
    else
        os << rr.violations << " nonzero residuals, max |residual| = " << rr.max_abs_residual
           << ", e.g. x = (" << *rr.first_counterexample << ")\n";

    if (s.dimension() == 2) report_two_vertex_pattern(s, os);

    const bool pass = degrees.ok() && symmetry.ok && rr.violations == 0;
    os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int cmd_ell(const std::string& structure_arg, const std::string& point_text, bool witness) {
    RRStructure s = load_structure_arg(structure_arg);
    Divisor x = Divisor::parse(point_text);
    if (witness) {
        auto w = s.ell_witness(x);
        std::cout << w.value << "\n";
        std::cout << "witness: nu[" << w.nu_index << "] = (" << s.nu_generators()[w.nu_index]
                  << "), h = (" << w.translate << "), m = " << divisor_list(w.coefficients)
                  << "\n";
    } else {
        std::cout << s.ell(x) << "\n";
    }
    return 0;
}

int cmd_rr_check(const std::string& structure_arg, std::size_t samples, std::uint64_t seed,
                 const std::string& box_text, long denominator) {
    if (samples < 1) throw ParseError("rr-check: --samples must be >= 1");
    if (denominator < 1) throw ParseError("rr-check: --denominator must be >= 1");
    RRStructure s = load_structure_arg(structure_arg);
    const auto interval = parse_interval(box_text);
    auto rr = run_rr_samples(s, samples, seed, interval, denominator);
    std::cout << "rr-check: " << structure_arg << ", " << samples << " samples, box ["
              << interval.first << "," << interval.second << "], denominator " << denominator
              << ", seed " << seed << "\n";
    std::cout << "max |residual| = " << rr.max_abs_residual << "\n";
    if (rr.violations == 0) {
        std::cout << "all residuals exactly 0\n";
        return 0;
    }
    const Divisor& x = *rr.first_counterexample;
    std::cout << rr.violations << " nonzero residual(s); counterexample x = (" << x << "): ell(x) = "
              << s.ell(x) << ", ell(kappa-x) = " << s.ell(s.kappa() - x) << ", deg(x)-g+1 = "
              << (degree(x) - s.genus() + Rational(1)) << "\n";
    return 1;
}

int cmd_from_graph(const std::string& graph_path, std::size_t base, const std::string& out_path) {
    WeightedGraph g = load_graph_file(graph_path);
    RRStructure s = to_structure(g, base);
    emit(out_path, structure_to_json_text(s));
    return 0;
}

int cmd_region(const std::string& structure_arg, const std::string& box_text,
               std::size_t resolution, const std::string& format, const std::string& out_path) {
    RRStructure s = load_structure_arg(structure_arg);
    RegionSpec spec;
    spec.box = parse_box(box_text, s.dimension());
    spec.resolution = resolution;
    RegionTable table = sample_region(s, spec);
    if (format == "csv")
        emit(out_path, emit_csv(table));
    else if (format == "svg")
        emit(out_path, emit_svg(table));
    else
        throw ParseError("region: --format must be csv or svg, got '" + format + "'");
    return 0;
}

int cmd_example(bool list, const std::string& name, const std::string& out_path) {
    if (list) {
        for (const auto& n : example_names()) std::cout << n << "\n";
        return 0;
    }
    if (name.empty()) throw ParseError("example: provide a name or --list");
    emit(out_path, structure_to_json_text(example_structure(name)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Riemann-Roch computations for lattice-translation divisor theories"};
    app.require_subcommand(1);

    std::string structure_arg, point_text, box_text, format, out_path, graph_path, example_name;
    std::size_t samples = 0, resolution = 0, base = 1;
    std::uint64_t seed = 0;
    long denominator = 1;
    bool witness = false, list_examples = false;

    auto* verify = app.add_subcommand("verify", "check degree hypotheses, symmetry, and the RR identity");
    verify->add_option("structure", structure_arg, "structure file or example name")->required();
    verify->add_option("--samples", samples, "spot-check sample count")->default_val(50);
    verify->add_option("--seed", seed, "PRNG seed")->default_val(1);
    verify->add_option("--box", box_text, "sampling interval lo..hi")->default_val("-5..5");

    auto* ell = app.add_subcommand("ell", "evaluate the dimension ell at a point");
    ell->add_option("structure", structure_arg, "structure file or example name")->required();
    ell->add_option("--point", point_text, "divisor, e.g. \"3,-1\"")->required();
    ell->add_flag("--witness", witness, "also print the minimizing (nu, h)");

    auto* rr = app.add_subcommand("rr-check", "sampled exact verification of the RR identity");
    rr->add_option("structure", structure_arg, "structure file or example name")->required();
    rr->add_option("--samples", samples, "number of sampled divisors")->default_val(100);
    rr->add_option("--seed", seed, "PRNG seed")->default_val(42);
    rr->add_option("--box", box_text, "sampling interval lo..hi")->default_val("-10..10");
    rr->add_option("--denominator", denominator, "sample points with this denominator")
        ->default_val(1);

    auto* fg = app.add_subcommand("from-graph", "build a structure from a weighted graph");
    fg->add_option("graph", graph_path, "graph JSON file")->required();
    fg->add_option("--base-vertex", base, "base vertex (1-based)")->default_val(1);
    fg->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* region = app.add_subcommand("region", "sample ell over a grid; CSV or SVG");
    region->add_option("structure", structure_arg, "structure file or example name")->required();
    region->add_option("--box", box_text, "per-axis intervals lo..hi[,lo..hi...]")->required();
    region->add_option("--resolution", resolution, "samples per axis (>= 2)")->default_val(41);
    region->add_option("--format", format, "csv or svg")->default_val("csv");
    region->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* example = app.add_subcommand("example", "print a built-in structure");
    example->add_flag("--list", list_examples, "list example names");
    example->add_option("name", example_name, "example name");
    example->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(structure_arg, samples, seed, box_text);
        if (ell->parsed()) return cmd_ell(structure_arg, point_text, witness);
        if (rr->parsed()) return cmd_rr_check(structure_arg, samples, seed, box_text, denominator);
        if (fg->parsed()) return cmd_from_graph(graph_path, base, out_path);
        if (region->parsed())
            return cmd_region(structure_arg, box_text, resolution, format, out_path);
        if (example->parsed()) return cmd_example(list_examples, example_name, out_path);
    } catch (const finrr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
