// oddcolor: solve, verify, kernelize, reduce, oracle, bench.
// Exit codes: 0 solved, 2 infeasible within k (or invalid coloring),
// 3 guard exceeded, 4 parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddcolor/dispatch.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/io.hpp"
#include "oddcolor/kernel.hpp"
#include "oddcolor/modulator.hpp"
#include "oddcolor/reductions.hpp"

using namespace oddcolor;
using json = nlohmann::json;

namespace {

constexpr int exit_solved = 0, exit_infeasible = 2, exit_guard = 3, exit_parse = 4;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json value_json(chi_value v)
{
    return v.is_unbounded() ? json("unbounded") : json(v.value());
}

json coloring_json(const std::optional<coloring>& f)
{
    return f ? json(f->colors) : json(nullptr);
}

void write_outputs(const std::string& prefix, const std::string& dimacs, const json& side)
{
    if (prefix.empty()) {
        std::cout << dimacs;
        std::cerr << side.dump(2) << "\n";
        return;
    }
    std::ofstream(prefix + ".col") << dimacs;
    std::ofstream(prefix + ".json") << side.dump(2) << "\n";
}

struct common {
    std::string file;
    std::string format = "dimacs";
    std::string intervals;
    int k = -1;
    bool as_json = false;
    int guard_n = 24;
    uint64_t seed = 1;

    graph load() const
    {
        if (file.empty() && !intervals.empty())
            return interval_graph(parse_intervals(slurp(intervals)));
        if (file.empty())
            throw input_error("no input graph");
        return parse_graph(slurp(file), parse_format_name(format));
    }
};

int cmd_solve(const common& c, const std::string& algo)
{
    graph g = c.load();
    dispatch_options opt;
    opt.guard_n = c.guard_n;
    if (!c.intervals.empty())
        opt.intervals = parse_intervals(slurp(c.intervals));
    if (!algo.empty()) {
        opt.forced = parse_route(algo);
        if (!opt.forced)
            throw input_error("unknown algorithm " + algo);
    }
    auto rep = dispatch(g, opt);
    bool within = c.k < 0 || rep.value() <= chi_value(c.k);
    if (c.as_json) {
        json det = {{"isolated_vertex", rep.found.has_isolated},
                    {"cograph", rep.found.cograph},
                    {"split", rep.found.split},
                    {"proper_interval", rep.found.proper_interval},
                    {"nd", rep.found.nd}};
        if (rep.found.cluster_t)
            det["cluster_t"] = *rep.found.cluster_t;
        if (rep.found.cocluster_t)
            det["cocluster_t"] = *rep.found.cocluster_t;
        if (rep.found.clique_d)
            det["clique_d"] = *rep.found.clique_d;
        json out = {{"route", to_string(rep.used)},
                    {"value", value_json(rep.value())},
                    {"lower", value_json(rep.lower)},
                    {"upper", value_json(rep.upper)},
                    {"exact", rep.exact()},
                    {"witness", coloring_json(rep.witness)},
                    {"verified", rep.verified},
                    {"millis", rep.millis},
                    {"detection", det},
                    {"stats", rep.stats},
                    {"notes", rep.notes}};
        if (c.k >= 0)
            out["within_k"] = within;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "route " << to_string(rep.used) << "\n";
        if (rep.exact())
            std::cout << "chi_odd " << rep.value().str() << "\n";
        else
            std::cout << "chi_odd in [" << rep.lower.str() << ", " << rep.upper.str() << "]\n";
        if (rep.witness) {
            std::cout << "coloring";
            for (color x : rep.witness->colors)
                std::cout << " " << x;
            std::cout << "\n";
        }
        for (const auto& n : rep.notes)
            std::cout << "note " << n << "\n";
    }
    return within ? exit_solved : exit_infeasible;
}

int cmd_verify(const common& c, const std::string& coloring_file)
{
    graph g = c.load();
    std::istringstream in(slurp(coloring_file));
    std::vector<color> cs;
    for (color x; in >> x;)
        cs.push_back(x);
    if (!in.eof())
        throw parse_error(0, "coloring must be whitespace-separated integers");
    if (static_cast<int>(cs.size()) != g.num_vertices())
        throw parse_error(0, "coloring has " + std::to_string(cs.size()) + " entries, graph has " +
                                 std::to_string(g.num_vertices()) + " vertices");
    int palette = 0;
    for (color x : cs) {
        if (x < 1)
            throw parse_error(0, "colors must be positive");
        palette = std::max(palette, x);
    }
    coloring f(cs, palette);
    auto cert = verify_odd_coloring(g, f);
    bool ok = cert.valid() && (c.k < 0 || f.used_colors() <= c.k);
    if (c.as_json) {
        json out = {{"valid", cert.valid()},
                    {"colors_used", f.used_colors()},
                    {"improper", cert.improper},
                    {"no_odd_color", cert.no_odd_color}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (cert.valid() ? "valid" : "invalid") << " odd coloring, " << f.used_colors() << " colors\n";
        for (vertex v : cert.improper)
            std::cout << "improper " << v << "\n";
        for (vertex v : cert.no_odd_color)
            std::cout << "no-odd-color " << v << "\n";
    }
    return ok ? exit_solved : exit_infeasible;
}

int cmd_kernelize(const common& c, int budget, const std::string& out_prefix)
{
    graph g = c.load();
    if (c.k < 0)
        throw input_error("kernelize needs --k");
    auto X = find_clique_modulator(g, budget);
    if (!X)
        throw guard_exceeded("no clique modulator within budget " + std::to_string(budget));
    dclique_instance inst{g, *X, c.k};
    auto res = kernelize(inst);
    int d = res.reduced.d();
    bool size_ok = res.verdict.has_value() || res.reduced.g.num_vertices() <= kernel_bound(d);
    json side = {{"d", d},
                 {"d_input", X->size()},
                 {"k", res.reduced.k},
                 {"verdict", res.verdict ? json(*res.verdict) : json(nullptr)},
                 {"size_bound_ok", size_ok},
                 {"vertices", res.reduced.g.num_vertices()},
                 {"modulator", res.reduced.X}};
    write_outputs(out_prefix, write_dimacs(res.reduced.g, "kernel k=" + std::to_string(res.reduced.k)), side);
    if (res.verdict && !*res.verdict)
        return exit_infeasible;
    return exit_solved;
}

int cmd_reduce(const common& c, const std::string& kind_name, const std::string& out_prefix)
{
    graph g = c.load();
    auto kind = parse_reduction_kind(kind_name);
    if (!kind)
        throw input_error("unknown reduction " + kind_name);
    if (c.k < 0)
        throw input_error("reduce needs --k");
    auto out = reduce(g, c.k, *kind);
    std::vector<std::string> roles;
    for (auto r : out.roles)
        roles.push_back(to_string(r));
    json side = {{"kind", kind_name},
                 {"k_out", out.k_out},
                 {"roles", roles},
                 {"fixups", out.fixups},
                 {"structure_ok", check_structure(out, *kind)}};
    if (*kind == reduction_kind::vc) {
        side["cover"] = out.cover;
        side["cover_size"] = out.cover.size();
    }
    if (*kind == reduction_kind::peb)
        side["elimination"] = out.elimination;
    if (*kind == reduction_kind::scb)
        side["star_center"] = out.star_center;
    write_outputs(out_prefix, write_dimacs(out.h, "reduction " + kind_name + " k=" + std::to_string(out.k_out)), side);
    return exit_solved;
}

int cmd_oracle(const common& c, const std::string& which)
{
    graph g = c.load();
    oracle_options opt{c.guard_n};
    static const std::map<std::string, oracle_result (*)(const graph&, const oracle_options&)> fns = {
        {"chi", chi}, {"chi_strong", chi_strong}, {"chi_odd", chi_odd}, {"chi_odd_strong", chi_odd_strong}};
    auto it = fns.find(which);
    if (it == fns.end())
        throw input_error("unknown invariant " + which);
    auto res = it->second(g, opt);
    bool within = c.k < 0 || res.value <= chi_value(c.k);
    if (c.as_json) {
        std::cout << json{{"invariant", which}, {"value", value_json(res.value)}, {"witness", coloring_json(res.witness)}}.dump(2)
                  << "\n";
    } else {
        std::cout << which << " " << res.value.str() << "\n";
        if (res.witness) {
            std::cout << "coloring";
            for (color x : res.witness->colors)
                std::cout << " " << x;
            std::cout << "\n";
        }
    }
    return within ? exit_solved : exit_infeasible;
}

int cmd_bench(const common& c, int n, int count)
{
    gen::rng r(c.seed);
    struct tally {
        int count = 0;
        double millis = 0;
    };
    std::map<std::string, tally> by_route;
    int skipped = 0;
    for (int i = 0; i < count; ++i) {
        graph g;
        switch (i % 5) {
        case 0:
            g = gen::random_connected_gnp(n, 0.4, r);
            break;
        case 1:
            g = gen::random_cograph(n, r);
            break;
        case 2:
            g = gen::random_split(n / 2, n - n / 2, 0.5, r);
            break;
        case 3:
            g = gen::random_distance_to_cluster(n, 2, r).g;
            break;
        default:
            g = gen::random_bounded_nd(n, 3, r);
        }
        dispatch_options opt;
        opt.guard_n = c.guard_n;
        try {
            auto rep = dispatch(g, opt);
            auto& t = by_route[to_string(rep.used)];
            ++t.count;
            t.millis += rep.millis;
        } catch (const guard_exceeded&) {
            ++skipped;
        }
    }
    if (c.as_json) {
        json out = {{"n", n}, {"count", count}, {"seed", c.seed}, {"guard_exceeded", skipped}};
        for (auto& [name, t] : by_route)
            out["routes"][name] = {{"count", t.count}, {"mean_millis", t.millis / t.count}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "route        count  mean_ms\n";
        for (auto& [name, t] : by_route)
            std::printf("%-12s %5d  %7.3f\n", name.c_str(), t.count, t.millis / t.count);
        if (skipped)
            std::cout << "guard exceeded on " << skipped << "\n";
    }
    return exit_solved;
}

void add_common(CLI::App* sub, common& c, bool needs_file = true)
{
    auto* f = sub->add_option("file", c.file, "graph file");
    if (needs_file)
        f->required();
    sub->add_option("--format", c.format, "dimacs or edgelist")->check(CLI::IsMember({"dimacs", "edgelist"}));
    sub->add_option("--intervals", c.intervals, "interval representation, one \"id l r\" per line");
    sub->add_option("--k", c.k, "color budget");
    sub->add_flag("--json", c.as_json, "JSON output");
    sub->add_option("--guard-n", c.guard_n, "largest vertex count for exhaustive search");
    sub->add_option("--seed", c.seed, "random seed");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"odd coloring toolkit"};
    app.require_subcommand(1);
    common c;
    std::string algo, kind, out_prefix, coloring_file, which = "chi_odd";
    int budget = 4, n = 10, count = 50;

    auto* solve = app.add_subcommand("solve", "odd chromatic number via the best applicable algorithm");
    add_common(solve, c, false);
    solve->add_option("--algo", algo, "force a route: isolated, cograph, split, interval, nd, cluster, cocluster, kernel, oracle");

    auto* verify = app.add_subcommand("verify", "check a coloring file (one color per vertex)");
    add_common(verify, c);
    verify->add_option("coloring", coloring_file, "coloring file")->required();

    auto* kern = app.add_subcommand("kernelize", "distance-to-clique kernel");
    add_common(kern, c);
    kern->add_option("--budget", budget, "largest clique modulator searched (<= 10)");
    kern->add_option("--out", out_prefix, "write PREFIX.col and PREFIX.json");

    auto* red = app.add_subcommand("reduce", "hardness construction");
    add_common(red, c);
    red->add_option("--kind", kind, "vc, cw, peb or scb")->required();
    red->add_option("--out", out_prefix, "write PREFIX.col and PREFIX.json");

    auto* orc = app.add_subcommand("oracle", "exact exhaustive search");
    add_common(orc, c);
    orc->add_option("--invariant", which, "chi, chi_strong, chi_odd or chi_odd_strong");

    auto* bench = app.add_subcommand("bench", "dispatch timings on random instances");
    add_common(bench, c, false);
    bench->add_option("--n", n, "vertices per instance");
    bench->add_option("--count", count, "number of instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve)
            return cmd_solve(c, algo);
        if (*verify)
            return cmd_verify(c, coloring_file);
        if (*kern)
            return cmd_kernelize(c, budget, out_prefix);
        if (*red)
            return cmd_reduce(c, kind, out_prefix);
        if (*orc)
            return cmd_oracle(c, which);
        if (*bench)
            return cmd_bench(c, n, count);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const guard_exceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return exit_guard;
    } catch (const contract_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
