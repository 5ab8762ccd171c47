#include <doctest.h>

#include <algorithm>

#include "oddcolor/generators.hpp"
#include "oddcolor/reductions.hpp"

using namespace oddcolor;

namespace {

int count_role(const reduction_output& out, vertex_role r)
{
    return static_cast<int>(std::count(out.roles.begin(), out.roles.end(), r));
}

} // namespace

TEST_CASE("reductions: kind names round trip")
{
    for (auto k : {reduction_kind::vc, reduction_kind::cw, reduction_kind::peb, reduction_kind::scb})
        CHECK(parse_reduction_kind(to_string(k)) == k);
    CHECK_FALSE(parse_reduction_kind("nope"));
}

TEST_CASE("reductions: structural helpers")
{
    CHECK(bipartition(gen::cycle(4)));
    CHECK_FALSE(bipartition(gen::cycle(5)));
    CHECK(all_degrees_odd(gen::complete(4)));
    CHECK_FALSE(all_degrees_odd(gen::path(3)));
    CHECK(is_vertex_cover(gen::star(3), {0}));
    CHECK_FALSE(is_vertex_cover(gen::path(4), {0, 3}));
    // P4 = a-b-c-d: eliminating bc first fails (a,d nonadjacent), ab then cd works
    graph p4 = gen::path(4);
    CHECK(is_perfect_edge_elimination(p4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(is_perfect_edge_elimination(p4, {{1, 2}}));
    CHECK_FALSE(is_perfect_edge_elimination(p4, {{0, 1}}));
    CHECK(is_star_convex_witness(gen::star(4), 0));
    CHECK_FALSE(is_star_convex_witness(gen::path(4), 0));
}

TEST_CASE("reductions: vc on a triangle")
{
    // K3, X = {0,1}: |V| odd, I_o empty (vertex 2 has degree 2) -> edge gadget
    auto out = reduce_vc_coloring_to_odd(gen::complete(3), {0, 1}, 3);
    CHECK(out.k_out == 4);
    CHECK(out.fixups == std::vector<std::string>{"edge"});
    CHECK(count_role(out, vertex_role::parity_gadget) == 2);
    CHECK(count_role(out, vertex_role::hub_z) == 1);
    CHECK(count_role(out, vertex_role::universal_u) == 1);
    CHECK(all_degrees_odd(out.h));
    CHECK(is_vertex_cover(out.h, out.cover));
    CHECK(verify_reduction_equivalence(gen::complete(3), 3, reduction_kind::vc));
}

TEST_CASE("reductions: vc preconditions")
{
    CHECK_THROWS_AS(reduce_vc_coloring_to_odd(gen::path(3), {0}, 3), contract_violation);
    // even |V| needs the triangle, which needs k >= 3
    CHECK_THROWS_AS(reduce_vc_coloring_to_odd(gen::path(2), {0}, 2), contract_violation);
    auto out = reduce_vc_coloring_to_odd(gen::path(2), {0}, 3);
    CHECK(std::find(out.fixups.begin(), out.fixups.end(), "triangle") != out.fixups.end());
    CHECK(all_degrees_odd(out.h));
}

TEST_CASE("reductions: cw pendants")
{
    auto out = reduce_cw_coloring_to_odd(gen::path(4));
    CHECK(out.h.num_vertices() == 6);
    CHECK(count_role(out, vertex_role::pendant) == 2);
    CHECK(all_degrees_odd(out.h));
    // chi(G) = chi_o(H) whenever G has an edge
    gen::rng r(7);
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i < 10; ++i) {
            graph t = gen::random_tree(n, r);
            CHECK(chi(t).value == chi_odd(reduce_cw_coloring_to_odd(t).h).value);
        }
    CHECK(chi(gen::cycle(5)).value == chi_odd(reduce_cw_coloring_to_odd(gen::cycle(5)).h).value);
    // K1: chi = 1 but the pendant edge forces 2; the decision form holds for k >= 2
    CHECK(chi_odd(reduce_cw_coloring_to_odd(gen::empty(1)).h).value == chi_value(2));
    CHECK(verify_reduction_equivalence(gen::empty(1), 2, reduction_kind::cw));
}

TEST_CASE("reductions: peb shape")
{
    graph g = gen::cycle(4);
    auto out = reduce_to_perfect_elim_bipartite(g, 3);
    CHECK(out.h.num_vertices() == 4 + 4 + 4);
    CHECK(count_role(out, vertex_role::edge_vertex) == 4);
    CHECK(count_role(out, vertex_role::pendant) == 4);
    CHECK(out.k_out == 3);
    CHECK(check_structure(out, reduction_kind::peb));
    CHECK_THROWS_AS(reduce_to_perfect_elim_bipartite(g, 2), contract_violation);
}

TEST_CASE("reductions: scb shape")
{
    graph g = gen::path(3);
    auto out = reduce_to_star_convex_bipartite(g, 3);
    // 3 originals, x, w, and |E(G)| + 3 edge vertices
    CHECK(out.h.num_vertices() == 3 + 2 + 5);
    CHECK(out.k_out == 5);
    CHECK(out.roles[out.star_center] == vertex_role::center_w);
    CHECK(check_structure(out, reduction_kind::scb));
}

TEST_CASE("reductions: equivalence on all connected graphs up to 5 vertices")
{
    for (auto kind : {reduction_kind::vc, reduction_kind::cw, reduction_kind::peb, reduction_kind::scb})
        for (int n = 1; n <= 5; ++n)
            for (const auto& g : gen::connected_graphs_up_to_iso(n))
                for (int k : {3, 4}) {
                    CAPTURE(to_string(kind));
                    CAPTURE(n);
                    CAPTURE(k);
                    CHECK(check_structure(reduce(g, k, kind), kind));
                    CHECK(verify_reduction_equivalence(g, k, kind));
                }
}
