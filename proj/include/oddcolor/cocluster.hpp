#pragma once

#include <vector>

#include "oddcolor/fpt.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

/// g - X is complete multipartite with independent parts I_1..I_p, listed
/// by ascending minimum vertex.
struct cocluster_instance {
    graph g;
    std::vector<vertex> X;
    int k = 0;
    std::vector<std::vector<vertex>> parts;

    int t() const { return static_cast<int>(X.size()); }
};

cocluster_instance make_cocluster_instance(const graph& g, std::vector<vertex> X, int k);

/// Exact minimum over all guesses (c, odd) of X. Colors of c(X) ∪ odd(X)
/// are placed inside at most one part each, with per-type parities; every
/// other part gets one new color, or two when it must offer an odd class.
/// Parts are matched to these roles by a DP in part order.
fpt_result solve_distance_to_cocluster(const cocluster_instance& inst, const fpt_options& opt = {});

} // namespace oddcolor
