#pragma once

#include <array>
#include <optional>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/oracle.hpp"

namespace oddcolor {

enum class cotree_kind { leaf, union_node, join_node };

struct cotree_node {
    cotree_kind kind = cotree_kind::leaf;
    vertex v = -1;                 // leaf only
    std::vector<int> children;     // node indices, >= 2 for inner nodes
    std::vector<vertex> vertices;  // leaves below, ascending
};

/// Canonical cotree: no union child under a union, no join child under a join.
struct cotree {
    std::vector<cotree_node> nodes;
    int root = -1;
    int num_vertices = 0;
};

struct cotree_result {
    std::optional<cotree> tree;
    /// Induced P4 a-b-c-d when g is not a cograph.
    std::optional<std::array<vertex, 4>> p4;
};

cotree_result build_cotree(const graph& g);
/// Graph whose cotree is t.
graph realize(const cotree& t);

struct invariant_tuple {
    chi_value chi, chi_strong, chi_odd, chi_odd_strong;
    friend bool operator==(const invariant_tuple&, const invariant_tuple&) = default;
};

enum class invariant { chi, chi_strong, chi_odd, chi_odd_strong };

/// All four values from per-node parity profiles.
invariant_tuple cograph_invariants(const cotree& t);
/// The value of one invariant with a witness coloring of realize(t).
oracle_result cograph_solve(const cotree& t, invariant which);

/// Closed-form join step: chi = a+b; chi_odd by the four-term min;
/// chi_strong = min(~a + b, a + ~b); chi_odd_strong adds the ~chi + ~chi term.
invariant_tuple join_tuples(const invariant_tuple& a, const invariant_tuple& b);

} // namespace oddcolor
