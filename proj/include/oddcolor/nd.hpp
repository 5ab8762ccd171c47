#pragma once

#include <optional>
#include <vector>

#include "oddcolor/fpt.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

enum class type_kind { clique, independent };

/// Coarsest partition into vertices of the same type, N(u)-v = N(v)-u.
/// Singleton types count as independent.
struct nd_partition {
    std::vector<std::vector<vertex>> types;
    std::vector<type_kind> kind;
    /// Type-level adjacency (all-or-nothing between distinct types).
    std::vector<std::vector<char>> adj;

    int size() const { return static_cast<int>(types.size()); }
};

nd_partition compute_nd_partition(const graph& g);

/// Color i+1 is the odd color of every independent type in T[i]; it is placed
/// on the types A[i], an odd or even number of times per g[i].
struct nd_guess {
    std::vector<std::vector<int>> T;
    std::vector<std::vector<int>> A;
    std::vector<std::vector<parity>> g;

    int colors() const { return static_cast<int>(T.size()); }
};

/// Guesses over [colors()] whose parities make c_i odd on each type of T_i,
/// with A_i independent in the type graph and no repeated color on a clique type.
std::vector<nd_guess> enumerate_nd_guesses(const nd_partition& part);

/// One (odd) or two (even) vertices of color i+1 in each type of A[i],
/// lowest index first; nullopt when a type runs out of vertices.
std::optional<coloring> phase1_color(const graph& g, const nd_partition& part, const nd_guess& guess);

struct phase2_result {
    coloring f;
    /// Per type: vertices still uncolored.
    std::vector<int> deferred;
};

/// Floods each independent type touched in phase 1 with its lowest phase-1
/// color, leaving one vertex uncolored when the remainder is odd.
phase2_result phase2_fill(const graph& g, const nd_partition& part, const coloring& partial, const nd_guess& guess);

/// Minimum over guesses of colors() + chi(residual graph).
fpt_result solve_neighborhood_diversity(const graph& g, const fpt_options& opt = {});

} // namespace oddcolor
