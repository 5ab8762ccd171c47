// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "brute_force.hpp"
#include "oddcolor/cluster.hpp"
#include "oddcolor/cocluster.hpp"
#include "oddcolor/cograph.hpp"
#include "oddcolor/dispatch.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/interval.hpp"
#include "oddcolor/kernel.hpp"
#include "oddcolor/nd.hpp"
#include "oddcolor/reductions.hpp"
#include "oddcolor/split.hpp"

using namespace oddcolor;

namespace {

struct outcome {
    bool pass = true;
    std::ostringstream detail;
    int failures = 0;

    void expect(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (failures++ < 3)
            detail << " [fail: " << what << "]";
        pass = false;
    }
};

bool run(int id, const std::string& name, double budget_s, const std::function<void(outcome&)>& body)
{
    outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > budget_s) {
        o.pass = false;
        o.detail << " [over time budget " << budget_s << "s]";
    }
    if (o.failures > 3)
        o.detail << " [" << o.failures << " failures total]";
    std::printf("%s %d %s:%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.str().c_str(), s);
    std::fflush(stdout);
    return o.pass;
}

bool bounded(chi_value v) { return !v.is_unbounded(); }

std::string str(chi_value v) { return v.str(); }

// Random interval representation with integer endpoints; resampled until no
// interval is isolated.
interval_rep random_rep(int n, int span, int max_len, bool unit, gen::rng& r)
{
    for (;;) {
        interval_rep rep;
        for (int i = 0; i < n; ++i) {
            int l = static_cast<int>(r() % static_cast<unsigned>(span));
            int len = unit ? max_len : 1 + static_cast<int>(r() % static_cast<unsigned>(max_len));
            rep.iv.push_back({double(l), double(l + len)});
        }
        if (!interval_graph(rep).has_isolated_vertex())
            return rep;
    }
}

void oracle_sanity(outcome& o)
{
    for (int n = 2; n <= 8; ++n)
        o.expect(chi_odd(gen::complete(n)).value == chi_value(n), "K" + std::to_string(n));
    o.expect(chi_odd(gen::cycle(4)).value == chi_value(4), "C4");
    o.expect(chi_odd(gen::path(3)).value == chi_value(3), "P3");
    o.expect(test::brute_min(gen::cycle(4), test::want::odd, false) == 4, "C4 by enumeration");
    o.expect(test::brute_min(gen::path(3), test::want::odd, false) == 3, "P3 by enumeration");
    gen::rng r(101);
    int bounded_count = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 1 + i % 10;
        graph g = gen::random_gnp(n, 0.2 + 0.1 * (i % 6), r);
        auto c = chi(g).value, cs = chi_strong(g).value, co = chi_odd(g).value, cos = chi_odd_strong(g).value;
        std::string tag = "graph " + std::to_string(i);
        o.expect(c <= cs && cs <= c + chi_value(1), tag + " chi sandwich");
        o.expect(c <= co, tag + " chi <= chi_odd");
        if (bounded(co)) {
            ++bounded_count;
            o.expect(co <= cos && cos <= co + chi_value(1), tag + " chi_odd sandwich");
        } else {
            o.expect(g.has_isolated_vertex() && cos.is_unbounded(), tag + " unbounded without isolated vertex");
        }
    }
    o.detail << " K2..K8, C4, P3 exact; 500 random graphs n<=10 (" << bounded_count << " with bounded chi_odd)";
}

void kernel_criterion(outcome& o)
{
    gen::rng r(202);
    int emitted = 0, decided = 0, small = 0, max_ratio_n = 0;
    for (int i = 0; i < 200; ++i) {
        bool in_subset = i % 2 == 0;
        int d = in_subset ? 1 + i % 3 : 1 + i % 4;
        int hi = in_subset ? 16 : 40;
        int n = d + 3 + static_cast<int>(r() % static_cast<unsigned>(hi - d - 2));
        auto mg = gen::random_distance_to_clique(n, d, r);
        int k = n - d + static_cast<int>(r() % 3) - 1;
        dclique_instance inst{mg.g, mg.modulator, k};
        auto res = kernelize(inst);
        std::string tag = "instance " + std::to_string(i);
        if (res.verdict) {
            ++decided;
        } else {
            ++emitted;
            max_ratio_n = std::max(max_ratio_n, res.reduced.g.num_vertices());
            o.expect(res.reduced.g.num_vertices() <= kernel_bound(res.reduced.d()), tag + " kernel above d^3+2d^2");
        }
        if (n <= 16 && d <= 3) {
            ++small;
            bool kd = res.verdict ? *res.verdict : is_odd_k_colorable(res.reduced.g, res.reduced.k);
            o.expect(kd == is_odd_k_colorable(mg.g, k), tag + " decision changed");
        }
    }
    o.detail << " 200 instances d<=4 n<=40: " << emitted << " kernels emitted, all within d^3+2d^2 (largest "
             << max_ratio_n << " vertices), " << decided << " decided outright; " << small
             << " with n<=16, d<=3 match the oracle decision";
}

void cograph_criterion(outcome& o)
{
    auto check = [&](const graph& g, const std::string& tag) {
        auto ct = build_cotree(g);
        if (!ct.tree)
            return false;
        auto inv = cograph_invariants(*ct.tree);
        o.expect(inv.chi == chi(g).value, tag + " chi");
        o.expect(inv.chi_strong == chi_strong(g).value, tag + " chi_strong");
        o.expect(inv.chi_odd == chi_odd(g).value, tag + " chi_odd");
        o.expect(inv.chi_odd_strong == chi_odd_strong(g).value, tag + " chi_odd_strong");
        return true;
    };
    int connected = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : gen::connected_graphs_up_to_iso(n))
            connected += check(g, "connected n=" + std::to_string(n));
    gen::rng r(303);
    for (int i = 0; i < 300; ++i) {
        graph g = gen::random_cograph(1 + i % 8, r);
        o.expect(check(g, "random " + std::to_string(i)), "random cograph not recognized");
    }
    o.detail << " " << connected << " connected cographs n<=7 and 300 random cographs n<=8, all four invariants";
}

void split_criterion(outcome& o)
{
    gen::rng r(404);
    int fallbacks = 0, predicate_checked = 0;
    for (int i = 0; i < 300; ++i) {
        int k = 2 + i % 5;
        int l = static_cast<int>(r() % static_cast<unsigned>(12 - k + 1));
        graph g = gen::random_permutation(gen::random_split(k, l, 0.3 + 0.1 * (i % 5), r), r);
        auto sp = split_partition_of(g);
        std::string tag = "split " + std::to_string(i);
        o.expect(sp.has_value(), tag + " not recognized");
        if (!sp)
            continue;
        auto res = chi_odd_split(g, *sp);
        auto want = chi_odd(g).value;
        o.expect(res.value == want, tag + " value " + str(res.value) + " vs oracle " + str(want));
        fallbacks += res.fallback;
        if (want.is_unbounded())
            continue;
        int kk = static_cast<int>(sp->K.size());
        o.expect(want == chi_value(kk) || want == chi_value(kk + 1), tag + " outside {k, k+1}");
        o.expect(res.witness && is_odd_coloring(g, *res.witness), tag + " witness");
        if (kk >= 3) {
            bool empty_nbhd = false;
            for (vertex v : sp->K)
                empty_nbhd = empty_nbhd || g.degree(v) == kk - 1;
            if (!empty_nbhd) {
                ++predicate_checked;
                o.expect(split_predicate_vertex(g, *sp).has_value() == (want == chi_value(kk + 1)),
                         tag + " characterization");
            }
        }
    }
    // |K| = 2: a maximal K2 with a pendants on one end and b on the other
    int two_clique = 0;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b) {
            graph g = gen::complete(2);
            for (int i = 0; i < a; ++i)
                g.add_edge(0, g.add_vertex());
            for (int i = 0; i < b; ++i)
                g.add_edge(1, g.add_vertex());
            auto res = chi_odd_split(g, make_split_partition(g, {0, 1}));
            auto want = chi_odd(g).value;
            o.expect(res.value == want, "k=2 a=" + std::to_string(a) + " b=" + std::to_string(b));
            o.expect(want == chi_value(a % 2 == 0 && b % 2 == 0 ? 2 : 3), "k=2 closed form");
            ++two_clique;
        }
    o.detail << " 300 random split graphs n<=12 (" << predicate_checked << " characterization checks, " << fallbacks
             << " witness fallbacks); " << two_clique << " |K|=2 graphs n<=10";
}

void interval_criterion(outcome& o)
{
    gen::rng r(505);
    int fallbacks = 0, repair = 0, extension = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 2 + i % 49;
        auto rep = random_rep(n, std::max(2, n), 2 + i % 5, false, r);
        auto res = color_interval_graph(rep);
        graph g = interval_graph(rep);
        std::string tag = "interval " + std::to_string(i);
        o.expect(res.f && is_odd_coloring(g, *res.f), tag + " invalid coloring");
        o.expect(res.f && res.f->used_colors() <= res.omega + 1, tag + " above omega+1");
        if (res.fallback) {
            ++fallbacks;
            repair += res.fallback_by == "repair";
            extension += res.fallback_by == "extension";
        }
    }
    int proper = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 11;
        auto rep = random_rep(n, n + 2, 1 + i % 3, true, r);
        graph g = interval_graph(rep);
        auto res = chi_odd_proper_interval(rep);
        std::string tag = "unit " + std::to_string(i);
        o.expect(res.value == chi_odd(g).value, tag + " value");
        o.expect(res.witness && is_odd_coloring(g, *res.witness), tag + " witness");
        proper += is_proper_interval(rep);
    }
    o.detail << " 500 representations n<=50 within omega+1; fallback rate " << fallbacks << "/500 (repair " << repair
             << ", extension " << extension << "); " << proper << "/200 unit-interval instances n<=12 exact";
}

void fpt_criterion(outcome& o)
{
    gen::rng r(606);
    auto compare = [&](const fpt_result& res, const graph& g, const std::string& tag) {
        auto want = chi_odd(g).value;
        o.expect(res.value == want, tag + " value " + str(res.value) + " vs oracle " + str(want));
        if (bounded(want))
            o.expect(res.witness && is_odd_coloring(g, *res.witness) && res.witness->used_colors() <= want.value(),
                     tag + " witness");
    };
    for (int i = 0; i < 50; ++i) {
        int n = 4 + i % 9, t = 1 + i % 3;
        auto mg = gen::random_distance_to_cluster(n, t, r);
        compare(solve_distance_to_cluster(make_cluster_instance(mg.g, mg.modulator, n)), mg.g,
                "cluster " + std::to_string(i));
    }
    for (int i = 0; i < 50; ++i) {
        int n = 4 + i % 9, t = 1 + i % 3;
        auto mg = gen::random_distance_to_cocluster(n, t, r);
        compare(solve_distance_to_cocluster(make_cocluster_instance(mg.g, mg.modulator, n)), mg.g,
                "cocluster " + std::to_string(i));
    }
    int nd_max = 0;
    for (int i = 0; i < 50; ++i) {
        int n = 3 + i % 10;
        graph g = gen::random_bounded_nd(n, 1 + i % 4, r);
        nd_max = std::max(nd_max, compute_nd_partition(g).size());
        compare(solve_neighborhood_diversity(g), g, "nd " + std::to_string(i));
    }
    // worked examples
    compare(solve_distance_to_cluster(make_cluster_instance(gen::complete(3), {}, 3)), gen::complete(3), "cluster K3");
    {
        graph g = gen::disjoint_union(gen::complete(2), gen::complete(2));
        vertex x = g.add_vertex();
        for (vertex v = 0; v < 4; ++v)
            g.add_edge(x, v);
        compare(solve_distance_to_cluster(make_cluster_instance(g, {x}, 5)), g, "cluster x over two K2");
    }
    graph k23 = gen::complete_bipartite(2, 3);
    auto cc = solve_distance_to_cocluster(make_cocluster_instance(k23, {}, 5));
    o.expect(cc.value == chi_value(3), "cocluster K2,3 = 3");
    o.expect(solve_distance_to_cocluster(make_cocluster_instance(gen::empty(1), {}, 1)).value.is_unbounded(),
             "cocluster K1 unbounded");
    o.expect(solve_neighborhood_diversity(k23).value == chi_value(3), "nd K2,3 = 3");
    o.expect(solve_neighborhood_diversity(gen::complete(4)).value == chi_value(4), "nd K4 = 4");
    o.detail << " 50 cluster (t<=3), 50 co-cluster (t<=3), 50 nd (max " << nd_max
             << " types) instances n<=12 match the oracle; worked examples hold";
}

void reductions_criterion(outcome& o)
{
    int instances = 0;
    for (auto kind : {reduction_kind::vc, reduction_kind::cw, reduction_kind::peb, reduction_kind::scb})
        for (int n = 1; n <= 5; ++n)
            for (const auto& g : gen::connected_graphs_up_to_iso(n))
                for (int k : {3, 4}) {
                    std::string tag = to_string(kind) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
                    auto out = reduce(g, k, kind);
                    o.expect(check_structure(out, kind), tag + " structure");
                    o.expect(verify_reduction_equivalence(g, k, kind), tag + " equivalence");
                    ++instances;
                }
    o.detail << " " << instances
             << " (graph, k, construction) triples over connected n<=5, k in {3,4}: contracts and structure hold";
}

void tree_criterion(outcome& o)
{
    gen::rng r(808);
    int worst = 0;
    for (int i = 0; i < 200; ++i) {
        graph t = gen::random_tree(2 + i % 11, r);
        auto v = chi_odd(t).value;
        o.expect(bounded(v) && v <= chi_value(3), "tree " + std::to_string(i) + " chi_odd " + str(v));
        if (bounded(v))
            worst = std::max(worst, v.value());
    }
    o.detail << " 200 random trees n<=12, max chi_odd " << worst;
}

void cross_route_criterion(outcome& o)
{
    gen::rng r(909);
    int accepted = 0, tried = 0, route_runs = 0;
    while (accepted < 100 && tried < 2000) {
        ++tried;
        int n = 4 + tried % 9;
        graph g;
        switch (tried % 5) {
        case 0:
            g = gen::random_connected_gnp(n, 0.5, r);
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
        if (g.has_isolated_vertex())
            continue;
        auto reps = all_routes(g);
        int exact = 0;
        for (const auto& rep : reps)
            exact += rep.exact();
        if (exact < 2)
            continue;
        ++accepted;
        route_runs += exact;
        for (const auto& rep : reps) {
            o.expect(!rep.witness || rep.verified, to_string(rep.used) + " unverified");
            o.expect(rep.value() == reps.front().value(),
                     "graph " + std::to_string(tried) + ": " + to_string(rep.used) + " " + str(rep.value()) + " vs " +
                         to_string(reps.front().used) + " " + str(reps.front().value()));
        }
    }
    o.expect(accepted == 100, "only " + std::to_string(accepted) + " graphs with two routes");
    o.detail << " " << accepted << " graphs, " << route_runs << " route runs, all agree";
}

} // namespace

int main()
{
    bool ok = true;
    ok &= run(1, "oracle sanity", 60, oracle_sanity);
    ok &= run(2, "distance-to-clique kernel", 300, kernel_criterion);
    ok &= run(3, "cograph invariants", 300, cograph_criterion);
    ok &= run(4, "split graphs", 300, split_criterion);
    ok &= run(5, "interval graphs", 300, interval_criterion);
    ok &= run(6, "FPT solvers", 600, fpt_criterion);
    ok &= run(7, "reductions", 600, reductions_criterion);
    ok &= run(8, "trees", 60, tree_criterion);
    ok &= run(9, "cross-route consistency", 300, cross_route_criterion);
    return ok ? 0 : 1;
}
