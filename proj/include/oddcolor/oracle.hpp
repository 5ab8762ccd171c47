#pragma once

#include <optional>
#include <stdexcept>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// Raised when an exhaustive routine is asked to work on an instance beyond
/// its configured size guard.
class guard_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct oracle_options {
    /// Largest vertex count the backtracking search accepts.
    int guard_n = 24;
};

struct oracle_result {
    chi_value value;
    /// Present whenever value is bounded; colors are 1..value.
    std::optional<coloring> witness;
};

enum class extension_mode { odd, proper };

/// Exact chromatic number (proper colorings).
oracle_result chi(const graph& g, const oracle_options& opt = {});
/// Exact odd chromatic number; unbounded iff some vertex has no neighbor.
oracle_result chi_odd(const graph& g, const oracle_options& opt = {});
/// Minimum k admitting a proper k-coloring with some odd-size color class.
oracle_result chi_strong(const graph& g, const oracle_options& opt = {});
/// As chi_strong, over odd colorings.
oracle_result chi_odd_strong(const graph& g, const oracle_options& opt = {});

/// A total k-coloring extending `pre` (0 = free) that is odd (or merely
/// proper, in proper mode), or nullopt when none exists.
std::optional<coloring> odd_colorable_with(const graph& g, int k, const coloring& pre,
                                           extension_mode mode = extension_mode::odd,
                                           const oracle_options& opt = {});

/// Decision form used by reductions and kernels: is there an odd k-coloring?
bool is_odd_k_colorable(const graph& g, int k, const oracle_options& opt = {});

/// Seeded random walk from a proper total coloring: picks a vertex with no
/// odd color and recolors one of its movable neighbors, staying proper and
/// within [1, f.k]. Returns true once f is odd; false if stuck or out of steps.
bool odd_repair(const graph& g, coloring& f, const std::vector<char>& movable, int steps, uint64_t seed = 1);

} // namespace oddcolor
