#include <doctest.h>

#include "oddcolor/generators.hpp"
#include "oddcolor/kernel.hpp"
#include "oddcolor/modulator.hpp"
#include "oddcolor/oracle.hpp"

using namespace oddcolor;

namespace {

bool removes_to_clique(const graph& g, const std::vector<vertex>& X)
{
    return g.is_clique(complement_set(g.num_vertices(), X));
}

// Decision after kernelization, settling an unset verdict by oracle.
bool kernel_decision(const dclique_instance& inst)
{
    auto r = kernelize(inst);
    if (r.verdict)
        return *r.verdict;
    return is_odd_k_colorable(r.reduced.g, r.reduced.k);
}

} // namespace

TEST_CASE("find_clique_modulator")
{
    CHECK(find_clique_modulator(gen::complete(5), 3)->empty());
    graph k5p = gen::complete(5);
    vertex p = k5p.add_vertex();
    k5p.add_edge(0, p);
    auto x = find_clique_modulator(k5p, 3);
    REQUIRE(x);
    CHECK(x->size() == 1);
    CHECK(removes_to_clique(k5p, *x));
    CHECK_FALSE(find_clique_modulator(gen::cycle(5), 1));
    CHECK(find_clique_modulator(gen::cycle(5), 3)->size() == 3);
    CHECK_THROWS_AS(find_clique_modulator(gen::cycle(5), 11), guard_exceeded);
}

TEST_CASE("find_clique_modulator is minimum")
{
    gen::rng r(3);
    for (int it = 0; it < 40; ++it) {
        auto mg = gen::random_distance_to_clique(6 + it % 8, 1 + it % 3, r);
        auto x = find_clique_modulator(mg.g, 5);
        REQUIRE(x);
        CHECK(x->size() <= mg.modulator.size());
        CHECK(removes_to_clique(mg.g, *x));
        if (!x->empty())
            CHECK_FALSE(find_clique_modulator(mg.g, static_cast<int>(x->size()) - 1));
    }
}

TEST_CASE("find_cluster_modulator / find_cocluster_modulator")
{
    CHECK(find_cluster_modulator(gen::disjoint_union(gen::complete(3), gen::complete(2)), 2)->empty());
    CHECK(find_cluster_modulator(gen::path(3), 2)->size() == 1);
    CHECK_FALSE(find_cluster_modulator(gen::cycle(5), 1));
    std::vector<int> parts{2, 3, 1};
    CHECK(find_cocluster_modulator(gen::complete_multipartite(parts), 2)->empty());
    CHECK(find_cocluster_modulator(gen::path(3).complement(), 2)->size() <= 1);
    CHECK_FALSE(find_cocluster_modulator(gen::cycle(5).complement(), 1));
    gen::rng r(9);
    for (int it = 0; it < 40; ++it) {
        auto mg = gen::random_distance_to_cluster(5 + it % 8, it % 4, r);
        auto x = find_cluster_modulator(mg.g, 4);
        REQUIRE(x);
        CHECK(x->size() <= mg.modulator.size());
        CHECK(is_cluster_graph(mg.g.induced(complement_set(mg.g.num_vertices(), *x))));
    }
}

TEST_CASE("partition_modulator thresholds")
{
    // Empty modulator.
    dclique_instance k4{gen::complete(4), {}, 4};
    auto p0 = partition_modulator(k4);
    CHECK(p0.X_low.empty());
    CHECK(p0.C1.empty());
    CHECK(p0.C_N.size() == 4);

    // x with no clique neighbor, d = 1.
    graph g = gen::complete(4);
    vertex x = g.add_vertex();
    g.add_edge(x, 0);
    g.remove_edge(x, 0);
    dclique_instance one{g, {x}, 5};
    CHECK(partition_modulator(one).X_low == std::vector<vertex>{x});

    // d = 2, n = 30, x with 25 clique neighbors lands in X_high (25 >= 30-4-2).
    graph h(30);
    for (int u = 2; u < 30; ++u)
        for (int v = u + 1; v < 30; ++v)
            h.add_edge(u, v);
    for (int v = 2; v < 27; ++v)
        h.add_edge(0, v);
    h.add_edge(1, 2);
    dclique_instance big{h, {0, 1}, 30};
    auto p = partition_modulator(big);
    CHECK(p.X_high == std::vector<vertex>{0});
    CHECK(p.X_low == std::vector<vertex>{1});
    // Lower bound on D_h from the counting argument.
    long long xh = static_cast<long long>(p.X_high.size());
    CHECK(static_cast<long long>(p.D_h.size()) >= 30 - (xh * 2 + 1) * 2);
    CHECK(p.rr2_applicable);
    CHECK(p.C2.size() == 3);
    CHECK(p.C2.front() == p.C1.front());
}

TEST_CASE("apply_rr1")
{
    graph g = gen::complete(10);
    dclique_instance same{g, {}, 10};
    CHECK(apply_rr1(same).g == g);

    // d = 2: vertex 0 is mid (4 clique neighbors, 2 <= 4 <= 12-4-2-1),
    // vertex 1 is low with no edge to 0.
    graph h(12);
    for (int u = 2; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v)
            h.add_edge(u, v);
    for (int v = 2; v < 6; ++v)
        h.add_edge(0, v);
    h.add_edge(1, 7);
    dclique_instance inst{h, {0, 1}, 12};
    auto p = partition_modulator(inst);
    CHECK(p.X_mid == std::vector<vertex>{0});
    auto out = apply_rr1(inst);
    CHECK(out.g.num_vertices() == 11);
    CHECK(out.d() == 1);
    CHECK(out.k == 12);

    // Now make 1 adjacent to 0: it gets a pendant.
    h.add_edge(0, 1);
    dclique_instance inst2{h, {0, 1}, 12};
    auto out2 = apply_rr1(inst2);
    CHECK(out2.g.num_vertices() == 12);
    CHECK(out2.d() == 2);
    CHECK(out2.g.degree(11) == 1);
    CHECK(out2.g.adjacent(0, 11));
}

TEST_CASE("apply_rr2 on a clique with one universal modulator vertex")
{
    graph g = gen::complete(21);
    dclique_instance inst{g, {0}, 21};
    auto p = partition_modulator(inst);
    REQUIRE(p.rr2_applicable);
    CHECK(p.C2.size() == 2);
    auto out = apply_rr2(inst, p);
    CHECK(out.applied);
    CHECK(out.inst.g.num_vertices() == 3);
    CHECK(out.inst.k == 21 - 18);
    // Equivalence at the reduced scale: both sides are cliques.
    CHECK(is_odd_k_colorable(out.inst.g, out.inst.k));

    dclique_instance tiny{gen::complete(3), {}, 3};
    CHECK_FALSE(apply_rr2(tiny, partition_modulator(tiny)).applied);
}

TEST_CASE("kernelize short-circuits")
{
    dclique_instance low{gen::complete(6), {}, 5};
    CHECK(kernelize(low).verdict == false);
    graph g = gen::complete(12);
    vertex x = g.add_vertex();
    g.add_edge(x, 0);
    dclique_instance many{g, {x}, 12};
    CHECK(kernelize(many).verdict == true);
    graph iso = gen::complete(12);
    iso.add_vertex();
    dclique_instance bad{iso, {12}, 20};
    CHECK(kernelize(bad).verdict == false);
}

TEST_CASE("kernelize: equivalence, size bound, idempotence")
{
    gen::rng r(41);
    int rr1 = 0, rr2 = 0;
    for (int it = 0; it < 120; ++it) {
        int d = 1 + it % 3;
        int n = d + 3 + static_cast<int>(r() % (14 - d));
        auto mg = gen::random_distance_to_clique(n, d, r);
        int base = n - d;
        for (int k = base; k <= base + 2; ++k) {
            dclique_instance inst{mg.g, mg.modulator, k};
            auto res = kernelize(inst);
            for (auto s : res.trace) {
                rr1 += s == kernel_step::rr1;
                rr2 += s == kernel_step::rr2;
            }
            CAPTURE(n);
            CAPTURE(d);
            CAPTURE(k);
            if (!res.verdict) {
                CHECK(res.reduced.g.num_vertices() <= kernel_bound(res.reduced.d()));
                auto again = kernelize(res.reduced);
                CHECK(again.reduced.g == res.reduced.g);
                CHECK(again.reduced.k == res.reduced.k);
            }
            CHECK(kernel_decision(inst) == is_odd_k_colorable(mg.g, k));
        }
    }
    MESSAGE("rr1 applications: " << rr1 << ", rr2 applications: " << rr2);
    CHECK(rr1 > 0);
    CHECK(rr2 > 0);
}

TEST_CASE("kernelize: size bound on larger instances")
{
    gen::rng r(77);
    for (int it = 0; it < 100; ++it) {
        int d = 1 + it % 4;
        int n = 20 + it % 21;
        auto mg = gen::random_distance_to_clique(n, d, r);
        auto res = kernelize({mg.g, mg.modulator, n - d + static_cast<int>(r() % 3)});
        if (!res.verdict)
            CHECK(res.reduced.g.num_vertices() <= kernel_bound(res.reduced.d()));
    }
}
