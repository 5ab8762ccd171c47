#pragma once

#include <optional>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// (G, X, d, k) with G - X a clique; d is |X|.
struct dclique_instance {
    graph g;
    std::vector<vertex> X;
    int k = 0;

    int d() const { return static_cast<int>(X.size()); }
    /// V(G) \ X, ascending.
    std::vector<vertex> clique() const;
};

struct modulator_partition {
    std::vector<vertex> X_low, X_mid, X_high, X_low_m;
    std::vector<vertex> C_N;
    std::vector<vertex> D_h, D_low, C1, C2, Cprime;
    /// False when X_high is empty or |C1| < d+1.
    bool rr2_applicable = false;
};

/// Throws contract_violation if G - X is not a clique.
void check_instance(const dclique_instance& inst);

modulator_partition partition_modulator(const dclique_instance& inst);

/// Deletes X_mid, hangs a fresh pendant (appended, joins X) on each X_low_m
/// vertex. Surviving vertices keep their relative order.
dclique_instance apply_rr1(const dclique_instance& inst);

/// Deletes C' and lowers k by |C'|; unchanged input and applied = false when
/// the rule does not apply.
struct rr2_outcome {
    dclique_instance inst;
    bool applied = false;
};
rr2_outcome apply_rr2(const dclique_instance& inst, const modulator_partition& part);

enum class kernel_step { none, isolated_vertex, budget_below_clique, small_clique, many_free_clique,
                         rr1, rr2, small_d_oracle };

struct kernel_result {
    dclique_instance reduced;
    /// Set when the pipeline decided the instance outright.
    std::optional<bool> verdict;
    std::vector<kernel_step> trace;
};

/// Runs the short-circuits and both rules to a fixpoint. Whenever the
/// verdict is unset, |V(reduced)| <= d^3 + 2d^2 with d = |reduced.X|.
kernel_result kernelize(const dclique_instance& inst);

inline long long kernel_bound(int d) { return 1LL * d * d * d + 2LL * d * d; }

} // namespace oddcolor
