#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddcolor/fpt.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

/// g - X is a disjoint union of cliques, listed by ascending minimum vertex.
struct cluster_instance {
    graph g;
    std::vector<vertex> X;
    int k = 0;
    std::vector<std::vector<vertex>> cliques;

    int t() const { return static_cast<int>(X.size()); }
};

cluster_instance make_cluster_instance(const graph& g, std::vector<vertex> X, int k);

enum class tri : uint8_t { zero, even, odd };

/// Parity after adding `used` (0 or 1 occurrences) to `prev`.
tri accumulate(tri prev, bool used);
/// The predecessors allowed by the backward transition table.
std::vector<tri> backward(tri cur, bool used);

/// Neighborhood types N(v) ∩ X (as bitmasks over X positions) that occur.
std::vector<uint32_t> realized_types(const cluster_instance& inst);

/// Clique vertices forced onto colors outside [t_prime] when each type cell
/// T^Y of `clique` uses exactly the base colors in h[Y] (bitmask over
/// [t_prime], bit i-1 for color i); absent if no such coloring of the clique
/// is proper against X and gives every clique vertex an odd color.
std::optional<int> clique_local_min_new(const cluster_instance& inst, const std::vector<vertex>& clique,
                                        const modulator_guess& guess, const std::vector<uint32_t>& types,
                                        const std::vector<uint32_t>& h);

fpt_result solve_distance_to_cluster(const cluster_instance& inst, const fpt_options& opt = {});

} // namespace oddcolor
