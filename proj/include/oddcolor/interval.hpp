#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/oracle.hpp"

namespace oddcolor {

struct interval {
    double l = 0, r = 0;
};

/// Closed intervals; vertex v is iv[v].
struct interval_rep {
    std::vector<interval> iv;
    int size() const { return static_cast<int>(iv.size()); }
};

/// Lines "id l r" with ids 0..n-1 (any order) and decimal or p/q endpoints;
/// '#' starts a comment line. Errors are parse_error with the line number.
interval_rep parse_intervals(const std::string& text);

/// Intersection graph.
graph interval_graph(const interval_rep& rep);

/// Same intersection graph with all 2n endpoints distinct: endpoints are
/// replaced by their ranks, ties ordered lefts first, then by vertex index.
interval_rep distinguish(const interval_rep& rep);
bool is_distinguishing(const interval_rep& rep);

int omega(const interval_rep& rep);

/// Greedy dominating path: start at the least right endpoint, then jump to
/// the furthest-reaching interval meeting the current one. One path per
/// component, concatenated in left-to-right order.
std::vector<std::vector<vertex>> build_backbone_paths(const interval_rep& rep);

struct interval_coloring {
    /// Absent only when some interval meets no other.
    std::optional<coloring> f;
    int omega = 0;
    /// The list greedy failed (exhausted list or verifier rejection).
    bool fallback = false;
    /// "repair" or "extension" when fallback is set.
    std::string fallback_by;
};

/// Backbone mod-3 coloring, then list greedy in left-endpoint order; any
/// failure goes to a local parity repair over the non-backbone vertices,
/// then to exact extension of the backbone coloring within omega+1 colors.
interval_coloring color_interval_graph(const interval_rep& rep);

bool is_proper_interval(const interval_rep& rep);

/// A vertex with omega-1 left and omega-1 right neighbors. Throws
/// contract_violation when some interval contains another.
std::optional<vertex> has_two_max_disjoint_cliques_vertex(const interval_rep& rep);

oracle_result chi_odd_proper_interval(const interval_rep& rep);

} // namespace oddcolor
