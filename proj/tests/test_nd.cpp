#include <doctest.h>

#include <set>

#include "oddcolor/generators.hpp"
#include "oddcolor/nd.hpp"
#include "oddcolor/oracle.hpp"

using namespace oddcolor;

TEST_CASE("compute_nd_partition")
{
    auto k23 = compute_nd_partition(gen::complete_bipartite(2, 3));
    REQUIRE(k23.size() == 2);
    std::multiset<size_t> sizes{k23.types[0].size(), k23.types[1].size()};
    CHECK(sizes == std::multiset<size_t>{2, 3});
    CHECK(k23.kind[0] == type_kind::independent);
    CHECK(k23.kind[1] == type_kind::independent);

    auto k4 = compute_nd_partition(gen::complete(4));
    REQUIRE(k4.size() == 1);
    CHECK(k4.kind[0] == type_kind::clique);

    auto p3 = compute_nd_partition(gen::path(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3.types[0] == std::vector<vertex>{0, 2});
    CHECK(p3.types[1] == std::vector<vertex>{1});
    CHECK(p3.kind[1] == type_kind::independent);

    gen::rng r(41);
    for (int trial = 0; trial < 100; ++trial) {
        graph g = gen::random_gnp(3 + trial % 8, 0.5, r);
        auto part = compute_nd_partition(g);
        for (int a = 0; a < part.size(); ++a)
            for (int b = 0; b < part.size(); ++b)
                for (vertex u : part.types[a])
                    for (vertex v : part.types[b])
                        if (u != v)
                            CHECK(g.adjacent(u, v) == (a == b ? part.kind[a] == type_kind::clique : bool(part.adj[a][b])));
    }
}

TEST_CASE("phase1_color and phase2_fill")
{
    graph k23 = gen::complete_bipartite(2, 3);
    auto part = compute_nd_partition(k23);
    int big = part.types[0].size() == 3 ? 0 : 1, small = 1 - big;

    nd_guess empty;
    auto none = phase1_color(k23, part, empty);
    REQUIRE(none);
    CHECK(none->used_colors() == 0);

    // one odd color aimed at the big side, placed once on the small side
    nd_guess one{{{big}}, {{small}}, {{parity::odd}}};
    auto p1 = phase1_color(k23, part, one);
    REQUIRE(p1);
    CHECK(std::count(p1->colors.begin(), p1->colors.end(), 1) == 1);
    auto p2 = phase2_fill(k23, part, *p1, one);
    // small side: 1 colored, 1 left over, odd remainder so it stays deferred
    CHECK(p2.deferred[small] == 1);
    CHECK(p2.deferred[big] == 3);

    graph p3 = gen::path(3);
    auto sp = compute_nd_partition(p3);
    REQUIRE(sp.types[1].size() == 1);
    nd_guess even{{{0}}, {{1}}, {{parity::even}}};
    CHECK_FALSE(phase1_color(p3, sp, even));

    // size 4 type, two vertices of one color: flood keeps the count even
    graph k14 = gen::complete_bipartite(1, 4);
    auto kp = compute_nd_partition(k14);
    int leaves = kp.types[0].size() == 4 ? 0 : 1;
    nd_guess two{{{1 - leaves}}, {{leaves}}, {{parity::even}}};
    auto q1 = phase1_color(k14, kp, two);
    REQUIRE(q1);
    auto q2 = phase2_fill(k14, kp, *q1, two);
    CHECK(q2.deferred[leaves] == 0);
    int ones = 0;
    for (vertex v : kp.types[leaves])
        ones += q2.f[v] == 1;
    CHECK(ones == 4);

    // size 3 type, one colored: the even remainder is flooded, count stays odd
    graph k13 = gen::complete_bipartite(1, 3);
    auto tp = compute_nd_partition(k13);
    int l3 = tp.types[0].size() == 3 ? 0 : 1;
    nd_guess odd3{{{1 - l3}}, {{l3}}, {{parity::odd}}};
    auto r1 = phase1_color(k13, tp, odd3);
    REQUIRE(r1);
    auto r2 = phase2_fill(k13, tp, *r1, odd3);
    CHECK(r2.deferred[l3] == 0);
    int c3 = 0;
    for (vertex v : tp.types[l3])
        c3 += r2.f[v] == 1;
    CHECK(c3 == 3);

    // size 4 type, one colored: flood two, defer one
    nd_guess odd4{{{1 - leaves}}, {{leaves}}, {{parity::odd}}};
    auto s1 = phase1_color(k14, kp, odd4);
    REQUIRE(s1);
    auto s2 = phase2_fill(k14, kp, *s1, odd4);
    CHECK(s2.deferred[leaves] == 1);
    int c4 = 0;
    for (vertex v : kp.types[leaves])
        c4 += s2.f[v] == 1;
    CHECK(c4 == 3);
}

TEST_CASE("every valid guess assembles an odd coloring")
{
    gen::rng r(43);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        graph g = gen::random_bounded_nd(4 + trial % 7, 1 + trial % 4, r);
        if (g.has_isolated_vertex())
            continue;
        auto part = compute_nd_partition(g);
        for (const auto& gs : enumerate_nd_guesses(part)) {
            auto p1 = phase1_color(g, part, gs);
            if (!p1)
                continue;
            auto p2 = phase2_fill(g, part, *p1, gs);
            for (int i = 0; i < gs.colors(); ++i)
                for (size_t a = 0; a < gs.A[i].size(); ++a) {
                    int cnt = 0;
                    for (vertex v : part.types[gs.A[i][a]])
                        cnt += p2.f[v] == i + 1;
                    CHECK((cnt % 2 == 1) == (gs.g[i][a] == parity::odd));
                }
            std::vector<vertex> rest;
            for (vertex v = 0; v < g.num_vertices(); ++v)
                if (p2.f[v] == 0)
                    rest.push_back(v);
            auto res = chi(g.induced(rest));
            REQUIRE(res.witness);
            coloring f = p2.f;
            f.k = gs.colors() + res.value.value();
            for (size_t j = 0; j < rest.size(); ++j)
                f[rest[j]] = gs.colors() + (*res.witness)[static_cast<vertex>(j)];
            CHECK(is_odd_coloring(g, f));
            // one color short on the residual breaks properness
            if (res.value.value() > 0) {
                auto less = odd_colorable_with(g.induced(rest), res.value.value() - 1,
                                               coloring(static_cast<int>(rest.size()), res.value.value() - 1),
                                               extension_mode::proper);
                CHECK_FALSE(less);
            }
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("independent types share their odd colors")
{
    gen::rng r(47);
    for (int trial = 0; trial < 60; ++trial) {
        graph g = gen::random_bounded_nd(4 + trial % 7, 2 + trial % 3, r);
        auto res = chi_odd(g);
        if (!res.witness)
            continue;
        auto part = compute_nd_partition(g);
        for (int ty = 0; ty < part.size(); ++ty) {
            if (part.kind[ty] != type_kind::independent)
                continue;
            std::set<std::set<color>> seen;
            for (vertex v : part.types[ty]) {
                std::map<color, int> cnt;
                for (vertex u : g.neighbors(v))
                    ++cnt[(*res.witness)[u]];
                std::set<color> odd;
                for (auto [c, m] : cnt)
                    if (m % 2)
                        odd.insert(c);
                seen.insert(odd);
            }
            CHECK(seen.size() == 1);
        }
    }
}

TEST_CASE("neighborhood diversity solver")
{
    CHECK(solve_neighborhood_diversity(gen::complete_bipartite(2, 3)).value == chi_value(3));
    CHECK(solve_neighborhood_diversity(gen::complete(4)).value == chi_value(4));
    CHECK(solve_neighborhood_diversity(gen::empty(2)).value == chi_value::unbounded());

    gen::rng r(53);
    for (int trial = 0; trial < 120; ++trial) {
        graph g = gen::random_bounded_nd(3 + trial % 10, 1 + trial % 4, r);
        auto res = solve_neighborhood_diversity(g);
        auto want = chi_odd(g);
        CHECK(res.value == want.value);
        if (!want.witness)
            continue;
        REQUIRE(res.witness);
        CHECK(is_odd_coloring(g, *res.witness));
        CHECK(res.witness->used_colors() == res.value.value());
    }
}
