#pragma once

#include <optional>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

struct fpt_options {
    /// Largest modulator (or type count) accepted.
    int max_t = 5;
    /// Cap on DP table entries per guess.
    long long max_states = 4'000'000;
};

struct fpt_stats {
    int t = 0;
    /// Base palette size of the winning guess.
    int t_prime = 0;
    long long guesses_tried = 0;
    long long dp_states = 0;
    /// Co-cluster only: parts given a second new color.
    int extra_colors = 0;
    /// Neighborhood diversity only: vertices left for the residual coloring.
    int residual_size = 0;
};

struct fpt_result {
    chi_value value;
    std::optional<coloring> witness;
    fpt_stats stats;

    bool within(int k) const { return value <= chi_value(k); }
};

/// Coloring of X (c) and designated odd colors (odd), both indexed by the
/// position in X, over the base palette [t_prime].
struct modulator_guess {
    std::vector<color> c;
    std::vector<color> odd;
    int t_prime = 0;
};

/// All proper colorings of g[X] with their odd-color designations, palettes
/// canonically renumbered by first use.
std::vector<modulator_guess> enumerate_guesses(const graph& g, const std::vector<vertex>& X);

} // namespace oddcolor
