#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/oracle.hpp"

namespace oddcolor {

/// K a maximal clique, I independent, K and I partition V.
struct split_partition {
    std::vector<vertex> K;  // ascending
    std::vector<vertex> I;  // ascending
    /// I split by exact neighborhood Y (sorted) in K.
    std::map<std::vector<vertex>, std::vector<vertex>> tcells;

    /// T^{K - {w}}: I-vertices adjacent to every K-vertex but w.
    const std::vector<vertex>& all_but(vertex w) const;
};

/// Degree-sequence split test, then K grown to a maximal clique.
std::optional<split_partition> split_partition_of(const graph& g);
/// Partition for a given clique K; throws if (K, V - K) is not a split.
split_partition make_split_partition(const graph& g, std::vector<vertex> K);

enum class split_case { degenerate, two_clique, empty_neighborhood, predicate, case_1a, case_1b, case_2 };

std::string to_string(split_case c);

struct split_result {
    chi_value value;
    std::optional<coloring> witness;
    split_case taken = split_case::degenerate;
    /// The vertex v witnessing the value k+1 characterization.
    std::optional<vertex> predicate_vertex;
    /// True when the constructive coloring failed verification and the
    /// witness had to be produced another way.
    bool fallback = false;
    /// "repair" (parity local search) or "extension" (exact search).
    std::string fallback_by;
};

/// The characterization: some v in K with |T^{K-w}| odd for all w != v and
/// N(v) cap I equal to the union of those cells. Meaningful for |K| >= 3.
std::optional<vertex> split_predicate_vertex(const graph& g, const split_partition& sp);

split_result chi_odd_split(const graph& g, const split_partition& sp);

} // namespace oddcolor
