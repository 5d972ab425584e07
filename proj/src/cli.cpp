#include "gridperim/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridperim/acceptance.hpp"
#include "gridperim/analysis.hpp"
#include "gridperim/oracle.hpp"

namespace gridperim::cli {

namespace {

using nlohmann::json;

json record_of(const PerimeterResult& r) {
    const ColumnProfile profile = expand(r.witness);
    const auto heights = profile.heights();
    json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["lower"] = lower_bound(r.n);
    const auto u = upper_bound(r.n);
    j["upper"] = u ? json(*u) : json(nullptr);
    j["certified"] = r.certified;
    j["witness_params"] = {{"a", r.witness.a},
                           {"c", r.witness.c},
                           {"k", r.witness.k},
                           {"last", r.witness.last}};
    j["witness_profile"] = std::vector<i64>(heights.begin(), heights.end());
    return j;
}

void csv_row(std::ostream& out, const PerimeterResult& r) {
    out << r.n << ',' << r.p << ',' << lower_bound(r.n) << ',';
    if (const auto u = upper_bound(r.n)) out << *u;
    out << ',' << (r.certified ? "true" : "false") << ',' << r.witness.a << ','
        << r.witness.c << ',' << r.witness.k << ',' << r.witness.last << '\n';
}

std::string ascii_render(const ColumnProfile& p) {
    std::string art;
    const i64 top = p.columns() > 0 ? p.height(0) : 0;
    for (i64 y = top - 1; y >= 0; --y) {
        for (i64 x = 0; x < p.columns() && p.height(x) > y; ++x) art += '#';
        art += '\n';
    }
    return art;
}

const char* direction_color(i64 dx, i64 dy) {
    if (dy == 0) return "#d62728";      // horizontal
    if (dx == 0) return "#1f77b4";      // vertical
    if (dx == dy) return "#2ca02c";     // diagonal
    return "#ff7f0e";                   // antidiagonal
}

std::string svg_render(const ColumnProfile& p) {
    constexpr i64 kKingDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    constexpr i64 kKingDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    const i64 cell = 28, margin = 24;
    const i64 cols = p.columns() + 1;
    const i64 rows = (p.columns() > 0 ? p.height(0) : 0) + 1;
    const i64 width = 2 * margin + cols * cell;
    const i64 height = 2 * margin + rows * cell;
    auto px = [&](double x) { return static_cast<double>(margin) + x * cell; };
    auto py = [&](double y) { return static_cast<double>(margin) + (rows - y) * cell; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    const GridSet set = profile_to_set(p);
    for (const Cell& q : set.cells())
        svg << "  <rect x=\"" << px(static_cast<double>(q.x)) << "\" y=\""
            << py(static_cast<double>(q.y) + 1) << "\" width=\"" << cell << "\" height=\""
            << cell << "\" fill=\"#c6dbef\" stroke=\"#607080\"/>\n";
    // quadrant walls
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(static_cast<double>(rows)) << "\" x2=\""
        << px(0) << "\" y2=\"" << py(0) << "\" stroke=\"#202020\" stroke-width=\"3\"/>\n";
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
        << px(static_cast<double>(cols)) << "\" y2=\"" << py(0)
        << "\" stroke=\"#202020\" stroke-width=\"3\"/>\n";
    // boundary edges, centre to centre, coloured by direction class
    for (const Cell& q : set.cells())
        for (int d = 0; d < 8; ++d) {
            const Cell v{q.x + kKingDx[d], q.y + kKingDy[d]};
            if (v.x < 0 || v.y < 0 || set.contains(v)) continue;
            svg << "  <line x1=\"" << px(static_cast<double>(q.x) + 0.5) << "\" y1=\""
                << py(static_cast<double>(q.y) + 0.5) << "\" x2=\""
                << px(static_cast<double>(v.x) + 0.5) << "\" y2=\""
                << py(static_cast<double>(v.y) + 0.5) << "\" stroke=\""
                << direction_color(kKingDx[d], kKingDy[d])
                << "\" stroke-width=\"2\" stroke-opacity=\"0.8\"/>\n";
        }
    svg << "</svg>\n";
    return svg.str();
}

struct SolveArgs {
    i64 n = -1, from = -1, to = -1;
    std::string format = "json";
};

struct RangeArgs {
    i64 from = 1, to = 1;
};

struct OracleArgs {
    std::string mode;
    i64 n = 1;
    bool all_witnesses = false;
};

struct PlateauArgs {
    i64 to = 1, min_len = 1;
};

struct RenderArgs {
    i64 n = 1;
    bool witness = false;
    bool ascii = false;
    std::string svg_path;
};

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const bool point = a.n >= 0;
    const bool range = a.from >= 0 || a.to >= 0;
    if (point == range) {
        err << "solve: pass either --n or both --from and --to\n";
        return 1;
    }
    if (range && (a.from < 1 || a.to < a.from)) {
        err << "solve: need 1 <= from <= to\n";
        return 1;
    }
    if (point && a.n < 1) {
        err << "solve: need n >= 1\n";
        return 1;
    }
    const i64 lo = point ? a.n : a.from;
    const i64 hi = point ? a.n : a.to;
    const auto table = perimeter_table(lo, hi);
    if (a.format == "csv") {
        out << "n,p,lower,upper,certified,a,c,k,last\n";
        for (const auto& r : table) csv_row(out, r);
    } else {
        for (const auto& r : table) out << record_of(r).dump() << '\n';
    }
    return 0;
}

int run_bounds(const RangeArgs& a, std::ostream& out, std::ostream& err) {
    if (a.from < 1 || a.to < a.from) {
        err << "bounds: need 1 <= from <= to\n";
        return 1;
    }
    for (i64 n = a.from; n <= a.to; ++n) {
        const auto b = bounds_for(n);
        json j;
        j["n"] = b.n;
        j["lower"] = b.lower;
        j["upper"] = b.upper ? json(*b.upper) : json(nullptr);
        j["real_gap"] = b.gap ? json(*b.gap) : json(nullptr);
        out << j.dump() << '\n';
    }
    return 0;
}

int run_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n < 1) {
        err << "oracle: need n >= 1\n";
        return 1;
    }
    json j;
    j["n"] = a.n;
    j["mode"] = a.mode;
    if (a.mode == "partitions") {
        const auto r = min_perimeter_partitions(a.n, a.all_witnesses);
        j["p"] = r.p;
        auto& w = j["witnesses"] = json::array();
        for (const auto& profile : r.profile_witnesses)
            w.push_back(std::vector<i64>(profile.heights().begin(), profile.heights().end()));
    } else {
        const auto r = min_perimeter_exhaustive(a.n, a.all_witnesses);
        j["p"] = r.p;
        auto& w = j["witnesses"] = json::array();
        for (const auto& set : r.set_witnesses) {
            json cells = json::array();
            for (const Cell& q : set.cells()) cells.push_back({q.x, q.y});
            w.push_back(std::move(cells));
        }
    }
    out << j.dump() << '\n';
    return 0;
}

int run_plateaus(const PlateauArgs& a, std::ostream& out, std::ostream& err) {
    if (a.to < 1 || a.min_len < 1) {
        err << "plateaus: need to >= 1 and min-len >= 1\n";
        return 1;
    }
    for (const auto& r : plateaus(1, a.to, a.min_len)) {
        json j;
        j["start"] = r.start;
        j["length"] = r.length;
        j["value"] = r.value;
        out << j.dump() << '\n';
    }
    return 0;
}

int run_nested(i64 to, std::ostream& out, std::ostream& err) {
    if (to < 1) {
        err << "nested: need to >= 1\n";
        return 1;
    }
    const auto r = nested_chain_analysis(to);
    json j;
    j["max_n"] = r.max_n;
    j["chains_exist_to"] = r.chains_exist_to;
    j["best_chain_perimeters"] = r.best_chain_perimeters;
    j["maximal_chain_count"] = r.maximal_chain_count;
    out << j.dump() << '\n';
    return 0;
}

int run_verify(bool quick, std::ostream& out) {
    acceptance::Options opt;
    opt.quick = quick;
    const auto results = acceptance::run(opt, out);
    const bool ok = acceptance::all_passed(results);
    out << (ok ? "VERIFY PASS" : "VERIFY FAIL") << " (" << results.size() << " checks)\n";
    return ok ? 0 : 1;
}

int run_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n < 1) {
        err << "render: need n >= 1\n";
        return 1;
    }
    if (a.ascii == !a.svg_path.empty()) {
        err << "render: pass exactly one of --ascii or --svg <path>\n";
        return 1;
    }
    const auto r = min_perimeter(a.n);
    const auto profile = expand(r.witness);
    if (a.witness)
        out << "witness: a=" << r.witness.a << " c=" << r.witness.c << " k=" << r.witness.k
            << " last=" << r.witness.last << " p=" << r.p << '\n';
    if (a.ascii) {
        out << ascii_render(profile);
        return 0;
    }
    std::ofstream file(a.svg_path);
    if (!file) {
        err << "render: cannot open " << a.svg_path << '\n';
        return 1;
    }
    file << svg_render(profile);
    out << "wrote " << a.svg_path << '\n';
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact edge-boundary minimisation on the king-move quadrant grid"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "minimum perimeter and witness per volume");
    solve->add_option("--n", solve_args.n, "single volume");
    solve->add_option("--from", solve_args.from, "range start");
    solve->add_option("--to", solve_args.to, "range end");
    solve->add_option("--format", solve_args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    RangeArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "analytic lower/upper bounds and gap");
    bounds->add_option("--from", bounds_args.from, "range start")->required();
    bounds->add_option("--to", bounds_args.to, "range end")->required();

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->add_option("--mode", oracle_args.mode, "partitions|exhaustive")
        ->required()
        ->check(CLI::IsMember({"partitions", "exhaustive"}));
    oracle->add_option("--n", oracle_args.n, "volume")->required();
    oracle->add_flag("--all-witnesses", oracle_args.all_witnesses, "return every minimiser");

    PlateauArgs plateau_args;
    auto* plats = app.add_subcommand("plateaus", "constant runs of the minimum perimeter");
    plats->add_option("--to", plateau_args.to, "sweep 1..to")->required();
    plats->add_option("--min-len", plateau_args.min_len, "minimum run length");

    i64 nested_to = 1;
    auto* nested = app.add_subcommand("nested", "nested optimal chain analysis");
    nested->add_option("--to", nested_to, "volumes 1..to")->required();

    bool verify_quick = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_flag("--quick", verify_quick, "cap oracle at 9 and cross-check at 40");

    RenderArgs render_args;
    auto* render = app.add_subcommand("render", "draw the optimal witness");
    render->add_option("--n", render_args.n, "volume")->required();
    render->add_flag("--witness", render_args.witness, "print witness parameters");
    render->add_flag("--ascii", render_args.ascii, "ASCII art to stdout");
    render->add_option("--svg", render_args.svg_path, "write an SVG file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args, out, err);
        if (bounds->parsed()) return run_bounds(bounds_args, out, err);
        if (oracle->parsed()) return run_oracle(oracle_args, out, err);
        if (plats->parsed()) return run_plateaus(plateau_args, out, err);
        if (nested->parsed()) return run_nested(nested_to, out, err);
        if (verify->parsed()) return run_verify(verify_quick, out);
        if (render->parsed()) return run_render(render_args, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gridperim");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gridperim::cli
