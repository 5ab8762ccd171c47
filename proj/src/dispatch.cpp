#include "oddcolor/dispatch.hpp"

#include <chrono>
#include <functional>

#include "oddcolor/cluster.hpp"
#include "oddcolor/cocluster.hpp"
#include "oddcolor/cograph.hpp"
#include "oddcolor/kernel.hpp"
#include "oddcolor/modulator.hpp"
#include "oddcolor/nd.hpp"
#include "oddcolor/split.hpp"

namespace oddcolor {

namespace {

constexpr route route_order[] = {route::isolated, route::cograph, route::split,   route::interval, route::nd,
                                 route::cluster,  route::cocluster, route::kernel, route::oracle};

void finish(const graph& g, solve_report& rep)
{
    if (!rep.witness)
        return;
    if (!is_odd_coloring(g, *rep.witness) || chi_value(rep.witness->used_colors()) > rep.upper)
        throw std::logic_error(to_string(rep.used) + " route emitted a witness that fails verification");
    rep.verified = true;
}

void take_fpt(solve_report& rep, const fpt_result& r)
{
    rep.lower = rep.upper = r.value;
    rep.witness = r.witness;
    rep.stats["t"] = r.stats.t;
    rep.stats["t_prime"] = r.stats.t_prime;
    rep.stats["guesses_tried"] = r.stats.guesses_tried;
    rep.stats["dp_states"] = r.stats.dp_states;
    if (rep.used == route::cocluster)
        rep.stats["extra_colors"] = r.stats.extra_colors;
    if (rep.used == route::nd)
        rep.stats["residual_size"] = r.stats.residual_size;
}

// Minimum k whose kernel the oracle accepts. The kernel decides k; it does
// not carry a coloring back, so this route reports no witness.
bool kernel_route(const graph& g, const std::vector<vertex>& X, const dispatch_options& opt, solve_report& rep)
{
    oracle_options oo{opt.guard_n};
    long long largest = 0;
    for (int k = 1; k <= g.num_vertices(); ++k) {
        auto res = kernelize({g, X, k});
        bool yes;
        if (res.verdict) {
            yes = *res.verdict;
        } else {
            if (res.reduced.g.num_vertices() > opt.guard_n)
                return false;
            largest = std::max<long long>(largest, res.reduced.g.num_vertices());
            yes = is_odd_k_colorable(res.reduced.g, res.reduced.k, oo);
        }
        if (yes) {
            rep.lower = rep.upper = chi_value(k);
            rep.stats["d"] = static_cast<long long>(X.size());
            rep.stats["largest_kernel"] = largest;
            if (g.num_vertices() <= opt.guard_n) {
                rep.witness = odd_colorable_with(g, k, coloring(g.num_vertices(), k), extension_mode::odd, oo);
                rep.notes.push_back("witness by exact search at the kernel's value");
            } else {
                rep.notes.push_back("decision only: kernels do not lift colorings");
            }
            return true;
        }
    }
    return false;
}

// Fills rep and returns true when route r applies within the limits.
bool run_route(route r, const graph& g, const dispatch_options& opt, detection& det, solve_report& rep)
{
    rep.used = r;
    int n = g.num_vertices();
    switch (r) {
    case route::isolated:
        if (!det.has_isolated)
            return false;
        rep.lower = rep.upper = chi_value::unbounded();
        return true;
    case route::cograph: {
        auto ct = build_cotree(g);
        det.cograph = ct.tree.has_value();
        if (!ct.tree)
            return false;
        auto res = cograph_solve(*ct.tree, invariant::chi_odd);
        rep.lower = rep.upper = res.value;
        rep.witness = res.witness;
        return true;
    }
    case route::split: {
        auto sp = split_partition_of(g);
        det.split = sp.has_value();
        if (!sp)
            return false;
        auto res = chi_odd_split(g, *sp);
        rep.lower = rep.upper = res.value;
        rep.witness = res.witness;
        rep.stats["k"] = static_cast<long long>(sp->K.size());
        rep.stats["fallback"] = res.fallback;
        rep.notes.push_back("case " + to_string(res.taken));
        if (res.predicate_vertex)
            rep.stats["predicate_vertex"] = *res.predicate_vertex;
        return true;
    }
    case route::interval: {
        if (!opt.intervals)
            return false;
        if (!(interval_graph(*opt.intervals) == g))
            throw contract_violation("interval representation does not match the graph");
        det.proper_interval = is_proper_interval(*opt.intervals);
        if (det.proper_interval) {
            auto res = chi_odd_proper_interval(*opt.intervals);
            rep.lower = rep.upper = res.value;
            rep.witness = res.witness;
            return true;
        }
        auto res = color_interval_graph(*opt.intervals);
        rep.stats["omega"] = res.omega;
        rep.stats["fallback"] = res.fallback;
        if (!res.f)
            return false;
        rep.witness = res.f;
        rep.upper = chi_value(res.f->used_colors());
        rep.lower = chi_value(std::min(res.omega, res.f->used_colors()));
        return true;
    }
    case route::nd: {
        auto part = compute_nd_partition(g);
        det.nd = part.size();
        if (part.size() > opt.nd_limit)
            return false;
        take_fpt(rep, solve_neighborhood_diversity(g, {opt.nd_limit}));
        return true;
    }
    case route::cluster: {
        auto X = find_cluster_modulator(g, std::min(opt.modulator_limit, 8));
        if (X)
            det.cluster_t = static_cast<int>(X->size());
        if (!X)
            return false;
        take_fpt(rep, solve_distance_to_cluster(make_cluster_instance(g, *X, n), {opt.modulator_limit}));
        return true;
    }
    case route::cocluster: {
        auto X = find_cocluster_modulator(g, std::min(opt.modulator_limit, 5));
        if (X)
            det.cocluster_t = static_cast<int>(X->size());
        if (!X)
            return false;
        take_fpt(rep, solve_distance_to_cocluster(make_cocluster_instance(g, *X, n), {opt.modulator_limit}));
        return true;
    }
    case route::kernel: {
        auto X = find_clique_modulator(g, std::min(opt.clique_modulator_limit, 10));
        if (X)
            det.clique_d = static_cast<int>(X->size());
        if (!X)
            return false;
        return kernel_route(g, *X, opt, rep);
    }
    case route::oracle: {
        if (n > opt.guard_n)
            return false;
        auto res = chi_odd(g, {opt.guard_n});
        rep.lower = rep.upper = res.value;
        rep.witness = res.witness;
        return true;
    }
    }
    return false;
}

template <class Stop>
std::vector<solve_report> run(const graph& g, const dispatch_options& opt, Stop stop)
{
    std::vector<solve_report> out;
    detection det;
    det.has_isolated = g.has_isolated_vertex();
    for (route r : route_order) {
        if (opt.forced && r != *opt.forced)
            continue;
        // every later route assumes a vertex with an empty neighborhood is gone
        if (det.has_isolated && r != route::isolated && !opt.forced)
            break;
        auto t0 = std::chrono::steady_clock::now();
        solve_report rep;
        bool ok = false;
        try {
            ok = run_route(r, g, opt, det, rep);
        } catch (const guard_exceeded&) {
            ok = false;
        }
        if (!ok)
            continue;
        finish(g, rep);
        rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(rep));
        if (stop(out.back()))
            break;
    }
    for (auto& rep : out)
        rep.found = det;
    return out;
}

} // namespace

std::string to_string(route r)
{
    switch (r) {
    case route::isolated:
        return "isolated";
    case route::cograph:
        return "cograph";
    case route::split:
        return "split";
    case route::interval:
        return "interval";
    case route::nd:
        return "nd";
    case route::cluster:
        return "cluster";
    case route::cocluster:
        return "cocluster";
    case route::kernel:
        return "kernel";
    case route::oracle:
        return "oracle";
    }
    return "?";
}

std::optional<route> parse_route(const std::string& s)
{
    for (route r : route_order)
        if (to_string(r) == s)
            return r;
    return std::nullopt;
}

std::vector<solve_report> all_routes(const graph& g, const dispatch_options& opt)
{
    return run(g, opt, [](const solve_report&) { return false; });
}

solve_report dispatch(const graph& g, const dispatch_options& opt)
{
    auto reps = run(g, opt, [](const solve_report& r) { return r.exact(); });
    for (auto& r : reps)
        if (r.exact())
            return r;
    // only the general interval bound is available
    if (!reps.empty())
        return reps.front();
    throw guard_exceeded("instance too large for exact toolkit");
}

} // namespace oddcolor
