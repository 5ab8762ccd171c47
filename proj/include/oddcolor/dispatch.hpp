#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddcolor/graph.hpp"
#include "oddcolor/interval.hpp"
#include "oddcolor/oracle.hpp"

namespace oddcolor {

enum class route { isolated, cograph, split, interval, nd, cluster, cocluster, kernel, oracle };

std::string to_string(route r);
std::optional<route> parse_route(const std::string& s);

struct dispatch_options {
    /// Representation of g, if known; the interval route needs one.
    std::optional<interval_rep> intervals;
    int nd_limit = 4;
    int modulator_limit = 3;
    int clique_modulator_limit = 3;
    int guard_n = 24;
    /// Run only this route.
    std::optional<route> forced;
};

struct detection {
    bool has_isolated = false;
    bool cograph = false;
    bool split = false;
    bool proper_interval = false;
    int nd = 0;
    std::optional<int> cluster_t, cocluster_t, clique_d;
};

struct solve_report {
    route used = route::oracle;
    /// lower == upper unless only the general interval bound was available.
    chi_value lower, upper;
    std::optional<coloring> witness;
    /// A witness exists and passed verify_odd_coloring within upper colors.
    bool verified = false;
    double millis = 0;
    detection found;
    /// Per-route diagnostics, e.g. guesses_tried, dp_states.
    std::map<std::string, long long> stats;
    std::vector<std::string> notes;

    bool exact() const { return lower == upper; }
    chi_value value() const { return upper; }
};

/// Every route that applies within the limits, in routing order.
std::vector<solve_report> all_routes(const graph& g, const dispatch_options& opt = {});

/// First route that decides the value exactly. Throws guard_exceeded when
/// none applies; a witness failing verification throws std::logic_error.
solve_report dispatch(const graph& g, const dispatch_options& opt = {});

} // namespace oddcolor
