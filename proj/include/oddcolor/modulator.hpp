#pragma once

#include <optional>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// Smallest X (|X| <= budget) with g - X a clique; vertex cover of the
/// complement by bounded branching. budget > 10 throws guard_exceeded.
std::optional<std::vector<vertex>> find_clique_modulator(const graph& g, int budget);

/// Smallest X (|X| <= budget) with g - X a disjoint union of cliques, by
/// branching on induced P3s. budget > 8 throws guard_exceeded.
std::optional<std::vector<vertex>> find_cluster_modulator(const graph& g, int budget);

/// As find_cluster_modulator on the complement: g - X complete multipartite.
std::optional<std::vector<vertex>> find_cocluster_modulator(const graph& g, int budget);

bool is_cluster_graph(const graph& g);

/// The vertices of V(g) not in `xs`, ascending.
std::vector<vertex> complement_set(int n, const std::vector<vertex>& xs);

} // namespace oddcolor
