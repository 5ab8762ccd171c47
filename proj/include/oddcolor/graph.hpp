#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddcolor {

using vertex = int;
using color = int;

/// Raised when an operation's documented precondition is not met.
class contract_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted and mirrored; a dense adjacency matrix
/// backs `adjacent()`. Connectivity is not required.
class graph {
public:
    graph() = default;
    explicit graph(int n);
    graph(int n, std::span<const std::pair<vertex, vertex>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    /// Adds uv if absent. Self-loops and out-of-range endpoints throw.
    bool add_edge(vertex u, vertex v);
    bool remove_edge(vertex u, vertex v);
    vertex add_vertex();

    bool adjacent(vertex u, vertex v) const { return mat_[static_cast<size_t>(u) * n_ + v] != 0; }
    const std::vector<vertex>& neighbors(vertex v) const { return adj_[v]; }
    int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }

    std::vector<std::pair<vertex, vertex>> edges() const;

    /// Induced subgraph on `keep` (relabelled in the given order).
    graph induced(std::span<const vertex> keep) const;
    graph complement() const;
    /// Graph with vertex v renamed to perm[v].
    graph relabel(std::span<const vertex> perm) const;

    bool has_isolated_vertex() const;
    bool is_clique(std::span<const vertex> vs) const;
    bool is_independent(std::span<const vertex> vs) const;
    std::vector<std::vector<vertex>> components() const;
    bool is_connected() const;

    /// Neighborhood as a 64-bit mask; requires n <= 64.
    uint64_t neighbor_mask(vertex v) const;

    friend bool operator==(const graph& a, const graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check_vertex(vertex v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<vertex>> adj_;
    std::vector<char> mat_;
};

/// Total or partial map vertex -> color in [1, k]; 0 marks "unassigned".
struct coloring {
    std::vector<color> colors;
    int k = 0;

    coloring() = default;
    coloring(int n, int palette) : colors(static_cast<size_t>(n), 0), k(palette) {}
    coloring(std::vector<color> cs, int palette) : colors(std::move(cs)), k(palette) {}

    int size() const { return static_cast<int>(colors.size()); }
    bool assigned(vertex v) const { return colors[v] != 0; }
    color operator[](vertex v) const { return colors[v]; }
    color& operator[](vertex v) { return colors[v]; }
    bool is_total() const;
    /// Number of distinct colors actually used.
    int used_colors() const;
    /// Relabels used colors to 1..used_colors() by first use; k shrinks to match.
    coloring compacted() const;
};

/// Per-vertex odd-color witness, plus the vertices that fail the check.
struct odd_certificate {
    std::vector<std::optional<color>> witness;
    std::vector<vertex> no_odd_color;
    std::vector<vertex> improper;

    bool valid() const { return no_odd_color.empty() && improper.empty(); }
    /// Union of both violation lists, sorted.
    std::vector<vertex> violations() const;
};

enum class parity : uint8_t { even, odd };

bool is_proper(const graph& g, const coloring& f);
std::optional<color> odd_color_of(const graph& g, const coloring& f, vertex v);
odd_certificate verify_odd_coloring(const graph& g, const coloring& f);
bool is_odd_coloring(const graph& g, const coloring& f);
std::map<color, parity> color_class_parities(const graph& g, const coloring& f);
bool has_odd_class(const coloring& f);

/// Chromatic-type value with an "unbounded" sentinel for odd variants on
/// graphs that contain a vertex with empty neighborhood.
class chi_value {
public:
    constexpr chi_value() = default;
    constexpr chi_value(int v) : v_(v) {}
    static constexpr chi_value unbounded() { return chi_value(kInf); }

    constexpr bool is_unbounded() const { return v_ == kInf; }
    int value() const
    {
        if (is_unbounded())
            throw contract_violation("value() of an unbounded chromatic value");
        return v_;
    }

    friend constexpr chi_value operator+(chi_value a, chi_value b)
    {
        return (a.is_unbounded() || b.is_unbounded()) ? unbounded() : chi_value(a.v_ + b.v_);
    }
    friend constexpr auto operator<=>(chi_value a, chi_value b) = default;

    std::string str() const { return is_unbounded() ? std::string("unbounded") : std::to_string(v_); }

private:
    static constexpr int kInf = INT_MAX;
    int v_ = 0;
};

} // namespace oddcolor
