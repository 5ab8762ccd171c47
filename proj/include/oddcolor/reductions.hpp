#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/oracle.hpp"

namespace oddcolor {

enum class reduction_kind { vc, cw, peb, scb };

std::string to_string(reduction_kind k);
std::optional<reduction_kind> parse_reduction_kind(const std::string& s);

enum class vertex_role { original, pendant, edge_vertex, universal_u, hub_z, center_w, parity_gadget };

std::string to_string(vertex_role r);

/// Target instance of a hardness construction. Gadget vertices follow the
/// originals: parity gadgets, edge vertices (edges in lexicographic order),
/// pendants, then z / w / u.
struct reduction_output {
    graph h;
    int k_out = 0;
    std::vector<vertex_role> roles;
    /// Parity gadgets that were actually added ("triangle", "edge").
    std::vector<std::string> fixups;
    /// vc: a vertex cover of h. peb: the pendant edges of the elimination
    /// scheme, in order. Empty otherwise.
    std::vector<vertex> cover;
    std::vector<std::pair<vertex, vertex>> elimination;
    /// scb: star center; the star's leaves are the edge vertices.
    vertex star_center = -1;
};

/// Graph coloring with vertex cover X to odd coloring with k+1 colors.
/// Throws contract_violation if X is not a cover, or if the triangle gadget
/// is needed while k < 3.
reduction_output reduce_vc_coloring_to_odd(const graph& g, const std::vector<vertex>& X, int k);
/// Pendant on every even-degree vertex; chi(g) <= k iff chi_o(h) <= k for k >= 2.
reduction_output reduce_cw_coloring_to_odd(const graph& g);
/// Subdivide every edge and hang a pendant on every original vertex.
reduction_output reduce_to_perfect_elim_bipartite(const graph& g, int k);
/// Add a universal x, subdivide every edge of g + x, join a new w to g + x.
reduction_output reduce_to_star_convex_bipartite(const graph& g, int k);

reduction_output reduce(const graph& g, int k, reduction_kind kind);

bool all_degrees_odd(const graph& h);
/// Side 0/1 per vertex, or nullopt if h has an odd cycle.
std::optional<std::vector<int>> bipartition(const graph& h);
bool is_vertex_cover(const graph& h, const std::vector<vertex>& X);
/// Pairwise disjoint edges, each bisimplicial once the earlier ones'
/// endpoints are gone, leaving no edge at the end.
bool is_perfect_edge_elimination(const graph& h, const std::vector<std::pair<vertex, vertex>>& seq);
/// Bipartite with `center` on one side, every vertex of the other side
/// adjacent to it: neighborhoods are subtrees of the star at `center`.
bool is_star_convex_witness(const graph& h, vertex center);

/// Structural property of the target class, by kind.
bool check_structure(const reduction_output& out, reduction_kind kind);

/// Oracle decision on both sides of the reduction's contract.
bool verify_reduction_equivalence(const graph& g, int k, reduction_kind kind, const oracle_options& opt = {40});

} // namespace oddcolor
