#pragma once

#include <random>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor::gen {

using rng = std::mt19937_64;

graph complete(int n);
graph empty(int n);
graph path(int n);
graph cycle(int n);
graph star(int leaves);
graph complete_multipartite(std::span<const int> part_sizes);
graph complete_bipartite(int a, int b);
graph disjoint_union(const graph& a, const graph& b);
graph join(const graph& a, const graph& b);

graph random_gnp(int n, double p, rng& r);
graph random_connected_gnp(int n, double p, rng& r);
graph random_tree(int n, rng& r);
graph random_permutation(const graph& g, rng& r);

/// Random cograph built from a random union/join tree over n leaves.
graph random_cograph(int n, rng& r);

/// Split graph: clique on the first k vertices, the rest independent with
/// random neighborhoods inside the clique (each nonempty when `no_isolated`).
graph random_split(int k, int independent, double p, rng& r, bool no_isolated = true);

/// Instance G with a designated modulator X (listed first, 0..t-1).
struct modulated_graph {
    graph g;
    std::vector<vertex> modulator;
};

/// G - X is one clique of size n - d; X-to-clique densities are varied per
/// modulator vertex so that low, mid and high classes all occur.
modulated_graph random_distance_to_clique(int n, int d, rng& r);
/// G - X is a disjoint union of cliques.
modulated_graph random_distance_to_cluster(int n, int t, rng& r);
/// G - X is complete multipartite.
modulated_graph random_distance_to_cocluster(int n, int t, rng& r);
/// Graph with neighborhood diversity at most `types`.
graph random_bounded_nd(int n, int types, rng& r);

/// All labelled graphs on n vertices, filtered to connected, deduplicated
/// up to isomorphism (n <= 7).
std::vector<graph> connected_graphs_up_to_iso(int n);

} // namespace oddcolor::gen
