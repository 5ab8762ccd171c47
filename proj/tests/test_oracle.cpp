#include <doctest.h>

#include "brute_force.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/oracle.hpp"

using namespace oddcolor;
using test::brute_min;
using test::want;

namespace {

std::optional<int> as_opt(chi_value v)
{
    return v.is_unbounded() ? std::nullopt : std::optional<int>(v.value());
}

} // namespace

TEST_CASE("oracle: small named graphs")
{
    CHECK(chi_odd(gen::cycle(4)).value == chi_value(4));
    CHECK(chi_odd(gen::cycle(5)).value == chi_value(5));
    CHECK(chi_odd(gen::path(3)).value == chi_value(3));
    CHECK(chi_odd(gen::path(2)).value == chi_value(2));
    CHECK(chi_odd(gen::complete(4)).value == chi_value(4));
    CHECK(chi_odd(gen::star(4)).value == chi_value(3));
    CHECK(chi_odd(gen::star(3)).value == chi_value(2));
    CHECK(chi_odd(gen::cycle(6)).value == chi_value(3));
    CHECK(chi_odd(graph(1)).value.is_unbounded());
    CHECK(chi_odd(gen::disjoint_union(gen::path(2), graph(1))).value.is_unbounded());
    CHECK(chi(gen::cycle(5)).value == chi_value(3));
    CHECK(chi(graph(0)).value == chi_value(0));
    CHECK(chi_odd(graph(0)).value == chi_value(0));
}

TEST_CASE("oracle: strong variants")
{
    // C4 with 2 colors has two even classes.
    CHECK(chi_strong(gen::cycle(4)).value == chi_value(3));
    CHECK(chi_strong(gen::complete(3)).value == chi_value(3));
    // P4: odd 3-colorings exist; one with an odd class too.
    auto r = chi_odd_strong(gen::path(4));
    REQUIRE(r.witness);
    CHECK(has_odd_class(*r.witness));
    CHECK(is_odd_coloring(gen::path(4), *r.witness));
}

TEST_CASE("oracle agrees with exhaustive enumeration")
{
    gen::rng r(2024);
    for (int it = 0; it < 250; ++it) {
        int n = 1 + it % 7;
        graph g = gen::random_gnp(n, 0.2 + 0.1 * (it % 6), r);
        CAPTURE(n);
        CHECK(as_opt(chi(g).value) == brute_min(g, want::proper, false));
        auto odd = chi_odd(g);
        CHECK(as_opt(odd.value) == brute_min(g, want::odd, false));
        if (odd.witness) {
            CHECK(is_odd_coloring(g, *odd.witness));
            CHECK(odd.witness->used_colors() <= odd.value.value());
        }
        CHECK(as_opt(chi_strong(g).value) == brute_min(g, want::proper, true));
        CHECK(as_opt(chi_odd_strong(g).value) == brute_min(g, want::odd, true));
    }
}

TEST_CASE("oracle value is invariant under relabelling")
{
    gen::rng r(5);
    for (int it = 0; it < 60; ++it) {
        graph g = gen::random_connected_gnp(2 + it % 9, 0.3, r);
        CHECK(chi_odd(g).value == chi_odd(gen::random_permutation(g, r)).value);
    }
}

TEST_CASE("odd_colorable_with respects the precoloring")
{
    graph c5 = gen::cycle(5);
    coloring pre(5, 3);
    pre[0] = 2;
    pre[2] = 2;
    // Vertex 1 would see color 2 twice.
    CHECK_FALSE(odd_colorable_with(c5, 5, pre));
    coloring pre5(5, 5);
    pre5[0] = 4;
    auto f = odd_colorable_with(c5, 5, pre5);
    REQUIRE(f);
    CHECK((*f)[0] == 4);
    CHECK(is_odd_coloring(c5, *f));

    coloring clash(5, 3);
    clash[0] = clash[1] = 1;
    CHECK_FALSE(odd_colorable_with(c5, 3, clash));

    // C4 precolored 1,2,1 cannot be finished oddly within 4 colors.
    coloring c4pre(4, 4);
    c4pre[0] = 1;
    c4pre[1] = 2;
    c4pre[2] = 1;
    CHECK_FALSE(odd_colorable_with(gen::cycle(4), 4, c4pre));
    CHECK(odd_colorable_with(gen::cycle(4), 4, c4pre, extension_mode::proper));
}

TEST_CASE("guard")
{
    CHECK_THROWS_AS(chi_odd(gen::path(30)), guard_exceeded);
    CHECK(chi_odd(gen::path(30), {40}).value == chi_value(3));
}
