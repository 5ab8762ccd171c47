#include "oddcolor/reductions.hpp"

#include <algorithm>
#include <queue>

namespace oddcolor {

namespace {

struct builder {
    graph h;
    std::vector<vertex_role> roles;

    vertex add(vertex_role r)
    {
        roles.push_back(r);
        return h.add_vertex();
    }
};

builder copy_of(const graph& g)
{
    builder b{g, std::vector<vertex_role>(static_cast<size_t>(g.num_vertices()), vertex_role::original)};
    return b;
}

// one maximal independent set, lowest index first; the rest is a cover
std::vector<vertex> greedy_cover(const graph& g)
{
    std::vector<char> in(static_cast<size_t>(g.num_vertices()), 0), blocked(in);
    for (vertex v = 0; v < g.num_vertices(); ++v)
        if (!blocked[v]) {
            in[v] = 1;
            for (vertex u : g.neighbors(v))
                blocked[u] = 1;
        }
    std::vector<vertex> X;
    for (vertex v = 0; v < g.num_vertices(); ++v)
        if (!in[v])
            X.push_back(v);
    return X;
}

} // namespace

std::string to_string(reduction_kind k)
{
    switch (k) {
    case reduction_kind::vc:
        return "vc";
    case reduction_kind::cw:
        return "cw";
    case reduction_kind::peb:
        return "peb";
    case reduction_kind::scb:
        return "scb";
    }
    return "?";
}

std::optional<reduction_kind> parse_reduction_kind(const std::string& s)
{
    for (auto k : {reduction_kind::vc, reduction_kind::cw, reduction_kind::peb, reduction_kind::scb})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

std::string to_string(vertex_role r)
{
    switch (r) {
    case vertex_role::original:
        return "original";
    case vertex_role::pendant:
        return "pendant";
    case vertex_role::edge_vertex:
        return "edge-vertex";
    case vertex_role::universal_u:
        return "universal-u";
    case vertex_role::hub_z:
        return "hub-z";
    case vertex_role::center_w:
        return "center-w";
    case vertex_role::parity_gadget:
        return "parity-gadget";
    }
    return "?";
}

reduction_output reduce_vc_coloring_to_odd(const graph& g, const std::vector<vertex>& X_in, int k)
{
    if (!is_vertex_cover(g, X_in))
        throw contract_violation("X is not a vertex cover");
    reduction_output out;
    builder b = copy_of(g);
    std::vector<vertex> X = X_in;
    if (g.num_vertices() % 2 == 0) {
        if (k < 3)
            throw contract_violation("the triangle gadget needs k >= 3");
        vertex a = b.add(vertex_role::parity_gadget), c = b.add(vertex_role::parity_gadget),
               d = b.add(vertex_role::parity_gadget);
        b.h.add_edge(a, c);
        b.h.add_edge(a, d);
        b.h.add_edge(c, d);
        X.push_back(a);
        X.push_back(c);
        out.fixups.push_back("triangle");
    }
    auto in_x = [&](vertex v) { return std::find(X.begin(), X.end(), v) != X.end(); };
    auto odd_outside = [&] {
        std::vector<vertex> io;
        for (vertex v = 0; v < b.h.num_vertices(); ++v)
            if (!in_x(v) && b.h.degree(v) % 2 == 1)
                io.push_back(v);
        return io;
    };
    if (odd_outside().size() % 2 == 0) {
        vertex a = b.add(vertex_role::parity_gadget), c = b.add(vertex_role::parity_gadget);
        b.h.add_edge(a, c);
        X.push_back(a);
        out.fixups.push_back("edge");
    }
    int n = b.h.num_vertices();
    auto io = odd_outside();
    for (vertex v : X)
        if (b.h.degree(v) % 2 == 1)
            b.h.add_edge(v, b.add(vertex_role::pendant));
    vertex z = b.add(vertex_role::hub_z);
    for (vertex v : io)
        b.h.add_edge(z, v);
    vertex u = b.add(vertex_role::universal_u);
    for (vertex v = 0; v < n; ++v)
        b.h.add_edge(u, v);
    std::sort(X.begin(), X.end());
    out.cover = X;
    out.cover.push_back(z);
    out.cover.push_back(u);
    out.h = std::move(b.h);
    out.roles = std::move(b.roles);
    out.k_out = k + 1;
    if (!all_degrees_odd(out.h))
        throw contract_violation("vc reduction produced an even-degree vertex");
    return out;
}

reduction_output reduce_cw_coloring_to_odd(const graph& g)
{
    reduction_output out;
    builder b = copy_of(g);
    for (vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) % 2 == 0)
            b.h.add_edge(v, b.add(vertex_role::pendant));
    out.h = std::move(b.h);
    out.roles = std::move(b.roles);
    if (!all_degrees_odd(out.h))
        throw contract_violation("cw reduction produced an even-degree vertex");
    return out;
}

reduction_output reduce_to_perfect_elim_bipartite(const graph& g, int k)
{
    if (k < 3)
        throw contract_violation("perfect elimination bipartite reduction needs k >= 3");
    reduction_output out;
    builder b{graph(g.num_vertices()), std::vector<vertex_role>(static_cast<size_t>(g.num_vertices()), vertex_role::original)};
    for (auto [i, j] : g.edges()) {
        vertex e = b.add(vertex_role::edge_vertex);
        b.h.add_edge(i, e);
        b.h.add_edge(j, e);
    }
    for (vertex p = 0; p < g.num_vertices(); ++p) {
        vertex y = b.add(vertex_role::pendant);
        b.h.add_edge(y, p);
        out.elimination.push_back({y, p});
    }
    out.h = std::move(b.h);
    out.roles = std::move(b.roles);
    out.k_out = k;
    return out;
}

reduction_output reduce_to_star_convex_bipartite(const graph& g, int k)
{
    if (k < 3)
        throw contract_violation("star-convex bipartite reduction needs k >= 3");
    int n = g.num_vertices();
    // g' = g + universal x, with x numbered n
    graph gp = g;
    vertex x = gp.add_vertex();
    for (vertex v = 0; v < n; ++v)
        gp.add_edge(x, v);
    reduction_output out;
    builder b{graph(n), std::vector<vertex_role>(static_cast<size_t>(n), vertex_role::original)};
    std::vector<std::pair<vertex, vertex>> edges = gp.edges();
    std::vector<vertex> evs;
    for (size_t i = 0; i < edges.size(); ++i)
        evs.push_back(b.add(vertex_role::edge_vertex));
    vertex w = b.add(vertex_role::center_w);
    vertex hx = b.add(vertex_role::universal_u);
    auto map = [&](vertex v) { return v == x ? hx : v; };
    for (size_t i = 0; i < edges.size(); ++i) {
        b.h.add_edge(map(edges[i].first), evs[i]);
        b.h.add_edge(map(edges[i].second), evs[i]);
    }
    for (vertex v = 0; v < n; ++v)
        b.h.add_edge(w, v);
    b.h.add_edge(w, hx);
    out.h = std::move(b.h);
    out.roles = std::move(b.roles);
    out.k_out = k + 2;
    out.star_center = w;
    return out;
}

reduction_output reduce(const graph& g, int k, reduction_kind kind)
{
    switch (kind) {
    case reduction_kind::vc:
        return reduce_vc_coloring_to_odd(g, greedy_cover(g), k);
    case reduction_kind::cw: {
        auto out = reduce_cw_coloring_to_odd(g);
        out.k_out = k;
        return out;
    }
    case reduction_kind::peb:
        return reduce_to_perfect_elim_bipartite(g, k);
    case reduction_kind::scb:
        return reduce_to_star_convex_bipartite(g, k);
    }
    throw contract_violation("unknown reduction");
}

bool all_degrees_odd(const graph& h)
{
    for (vertex v = 0; v < h.num_vertices(); ++v)
        if (h.degree(v) % 2 == 0)
            return false;
    return true;
}

std::optional<std::vector<int>> bipartition(const graph& h)
{
    std::vector<int> side(static_cast<size_t>(h.num_vertices()), -1);
    for (vertex s = 0; s < h.num_vertices(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::queue<vertex> q;
        q.push(s);
        while (!q.empty()) {
            vertex v = q.front();
            q.pop();
            for (vertex u : h.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    q.push(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_vertex_cover(const graph& h, const std::vector<vertex>& X)
{
    std::vector<char> in(static_cast<size_t>(h.num_vertices()), 0);
    for (vertex v : X) {
        if (v < 0 || v >= h.num_vertices())
            return false;
        in[v] = 1;
    }
    for (auto [u, v] : h.edges())
        if (!in[u] && !in[v])
            return false;
    return true;
}

bool is_perfect_edge_elimination(const graph& h, const std::vector<std::pair<vertex, vertex>>& seq)
{
    if (!bipartition(h))
        return false;
    int n = h.num_vertices();
    std::vector<char> gone(static_cast<size_t>(n), 0);
    for (auto [a, b] : seq) {
        if (gone[a] || gone[b] || !h.adjacent(a, b))
            return false;
        // N(a) ∪ N(b) in the remaining graph must be complete bipartite
        std::vector<vertex> na, nb;
        for (vertex u : h.neighbors(a))
            if (!gone[u])
                na.push_back(u);
        for (vertex u : h.neighbors(b))
            if (!gone[u])
                nb.push_back(u);
        for (vertex p : na)
            for (vertex q : nb)
                if (!h.adjacent(p, q))
                    return false;
        gone[a] = gone[b] = 1;
    }
    for (auto [u, v] : h.edges())
        if (!gone[u] && !gone[v])
            return false;
    return true;
}

bool is_star_convex_witness(const graph& h, vertex center)
{
    auto side = bipartition(h);
    if (!side || center < 0 || center >= h.num_vertices())
        return false;
    for (vertex v = 0; v < h.num_vertices(); ++v)
        if ((*side)[v] != (*side)[center] && h.degree(v) > 0 && !h.adjacent(v, center))
            return false;
    return true;
}

bool check_structure(const reduction_output& out, reduction_kind kind)
{
    switch (kind) {
    case reduction_kind::vc:
        return all_degrees_odd(out.h) && is_vertex_cover(out.h, out.cover);
    case reduction_kind::cw:
        return all_degrees_odd(out.h);
    case reduction_kind::peb:
        return bipartition(out.h).has_value() && is_perfect_edge_elimination(out.h, out.elimination);
    case reduction_kind::scb:
        return is_star_convex_witness(out.h, out.star_center);
    }
    return false;
}

bool verify_reduction_equivalence(const graph& g, int k, reduction_kind kind, const oracle_options& opt)
{
    auto out = reduce(g, k, kind);
    bool source = odd_colorable_with(g, k, coloring(g.num_vertices(), k), extension_mode::proper, opt).has_value();
    bool target = is_odd_k_colorable(out.h, out.k_out, opt);
    return source == target;
}

} // namespace oddcolor
