#include "oddcolor/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oddcolor::gen {

namespace {

int uniform(rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }
bool coin(rng& r, double p) { return std::bernoulli_distribution(p)(r); }

// Random composition of n into parts of size in [lo, hi] (last part may be
// smaller than lo only if n < lo).
std::vector<int> random_sizes(int n, int lo, int hi, rng& r)
{
    std::vector<int> out;
    while (n > 0) {
        int s = std::min(n, uniform(r, lo, hi));
        if (n - s > 0 && n - s < lo)
            s = n;
        out.push_back(s);
        n -= s;
    }
    return out;
}

} // namespace

graph complete(int n)
{
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

graph empty(int n) { return graph(n); }

graph path(int n)
{
    graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

graph cycle(int n)
{
    graph g = path(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

graph star(int leaves)
{
    graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

graph complete_multipartite(std::span<const int> part_sizes)
{
    int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    std::vector<int> part;
    for (size_t i = 0; i < part_sizes.size(); ++i)
        part.insert(part.end(), static_cast<size_t>(part_sizes[i]), static_cast<int>(i));
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v])
                g.add_edge(u, v);
    return g;
}

graph complete_bipartite(int a, int b)
{
    std::vector<int> s{a, b};
    return complete_multipartite(s);
}

graph disjoint_union(const graph& a, const graph& b)
{
    int na = a.num_vertices();
    graph g(na + b.num_vertices());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(u + na, v + na);
    return g;
}

graph join(const graph& a, const graph& b)
{
    graph g = disjoint_union(a, b);
    for (int u = 0; u < a.num_vertices(); ++u)
        for (int v = 0; v < b.num_vertices(); ++v)
            g.add_edge(u, a.num_vertices() + v);
    return g;
}

graph random_gnp(int n, double p, rng& r)
{
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(r, p))
                g.add_edge(u, v);
    return g;
}

graph random_connected_gnp(int n, double p, rng& r)
{
    graph g = random_tree(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(r, p))
                g.add_edge(u, v);
    return random_permutation(g, r);
}

graph random_tree(int n, rng& r)
{
    graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, uniform(r, 0, v - 1));
    return g;
}

graph random_permutation(const graph& g, rng& r)
{
    std::vector<vertex> perm(static_cast<size_t>(g.num_vertices()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), r);
    return g.relabel(perm);
}

graph random_cograph(int n, rng& r)
{
    if (n <= 1)
        return graph(n);
    int a = uniform(r, 1, n - 1);
    graph ga = random_cograph(a, r);
    graph gb = random_cograph(n - a, r);
    return coin(r, 0.5) ? join(ga, gb) : disjoint_union(ga, gb);
}

graph random_split(int k, int independent, double p, rng& r, bool no_isolated)
{
    graph g = complete(k);
    for (int i = 0; i < independent; ++i) {
        vertex v = g.add_vertex();
        for (int u = 0; u < k; ++u)
            if (coin(r, p))
                g.add_edge(u, v);
        if (no_isolated && k > 0 && g.degree(v) == 0)
            g.add_edge(uniform(r, 0, k - 1), v);
    }
    return g;
}

modulated_graph random_distance_to_clique(int n, int d, rng& r)
{
    graph g(n);
    int c = n - d;
    for (int u = d; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    for (int x = 0; x < d; ++x) {
        int lo = 0, hi = c;
        switch (uniform(r, 0, 3)) {
        case 0: hi = std::min(c, std::max(0, d - 1)); break;
        case 1: lo = std::min(c, d); hi = std::max(lo, std::min(c, n - d * d - d - 1)); break;
        case 2: lo = std::max(0, std::min(c, n - d * d - d)); break;
        default: break;
        }
        int want = uniform(r, lo, std::max(lo, hi));
        std::vector<vertex> cl(static_cast<size_t>(c));
        std::iota(cl.begin(), cl.end(), d);
        std::shuffle(cl.begin(), cl.end(), r);
        for (int i = 0; i < want; ++i)
            g.add_edge(x, cl[i]);
        for (int y = x + 1; y < d; ++y)
            if (coin(r, 0.5))
                g.add_edge(x, y);
    }
    for (int x = 0; x < d; ++x)
        if (g.degree(x) == 0 && n > 1)
            g.add_edge(x, c > 0 ? uniform(r, d, n - 1) : (x + 1) % n);
    std::vector<vertex> X(static_cast<size_t>(d));
    std::iota(X.begin(), X.end(), 0);
    return {std::move(g), X};
}

modulated_graph random_distance_to_cluster(int n, int t, rng& r)
{
    graph g(n);
    auto sizes = random_sizes(n - t, t == 0 ? 2 : 1, 4, r);
    int at = t;
    for (int s : sizes) {
        for (int u = at; u < at + s; ++u)
            for (int v = u + 1; v < at + s; ++v)
                g.add_edge(u, v);
        at += s;
    }
    double p = std::uniform_real_distribution<double>(0.2, 0.7)(r);
    for (int x = 0; x < t; ++x)
        for (int v = x + 1; v < n; ++v)
            if (coin(r, p))
                g.add_edge(x, v);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0 && n > 1) {
            if (v >= t && t > 0)
                g.add_edge(v, uniform(r, 0, t - 1));
            else if (v < t)
                g.add_edge(v, v == n - 1 ? 0 : uniform(r, v + 1, n - 1));
        }
    std::vector<vertex> X(static_cast<size_t>(t));
    std::iota(X.begin(), X.end(), 0);
    return {std::move(g), X};
}

modulated_graph random_distance_to_cocluster(int n, int t, rng& r)
{
    auto sizes = random_sizes(n - t, 1, 4, r);
    if (t == 0 && sizes.size() == 1 && n > 1)
        sizes = {1, n - 1};
    graph core = complete_multipartite(sizes);
    graph g(n);
    for (auto [u, v] : core.edges())
        g.add_edge(u + t, v + t);
    double p = std::uniform_real_distribution<double>(0.2, 0.7)(r);
    for (int x = 0; x < t; ++x)
        for (int v = x + 1; v < n; ++v)
            if (coin(r, p))
                g.add_edge(x, v);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0 && n > 1) {
            if (v >= t && t > 0)
                g.add_edge(v, uniform(r, 0, t - 1));
            else if (v < t)
                g.add_edge(v, v == n - 1 ? 0 : uniform(r, v + 1, n - 1));
        }
    std::vector<vertex> X(static_cast<size_t>(t));
    std::iota(X.begin(), X.end(), 0);
    return {std::move(g), X};
}

graph random_bounded_nd(int n, int types, rng& r)
{
    types = std::max(1, std::min(types, n));
    std::vector<int> type_of(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        type_of[v] = v < types ? v : uniform(r, 0, types - 1);
    std::vector<char> clique(static_cast<size_t>(types));
    for (auto& c : clique)
        c = coin(r, 0.4);
    std::vector<std::vector<char>> link(static_cast<size_t>(types), std::vector<char>(static_cast<size_t>(types), 0));
    for (int a = 0; a < types; ++a)
        for (int b = a + 1; b < types; ++b)
            link[a][b] = link[b][a] = coin(r, 0.5);
    graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int a = type_of[u], b = type_of[v];
            if (a == b ? clique[a] != 0 : link[a][b] != 0)
                g.add_edge(u, v);
        }
    return random_permutation(g, r);
}

namespace {

// Canonical code: minimum adjacency bit-string over relabellings that sort
// vertices by degree (permuting freely within equal-degree blocks).
std::vector<uint8_t> canonical_code(const graph& g)
{
    int n = g.num_vertices();
    std::vector<vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](vertex a, vertex b) { return g.degree(a) < g.degree(b); });
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i]))
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<uint8_t> best;
    std::vector<uint8_t> code;
    // Enumerate the product of per-block permutations.
    std::function<void(size_t)> rec = [&](size_t b) {
        if (b == blocks.size()) {
            code.clear();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    code.push_back(g.adjacent(order[i], order[j]) ? 1 : 0);
            if (best.empty() || code < best)
                best = code;
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(b + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return best;
}

} // namespace

std::vector<graph> connected_graphs_up_to_iso(int n)
{
    std::vector<graph> level{graph(n >= 1 ? 1 : 0)};
    for (int m = 2; m <= n; ++m) {
        std::set<std::vector<uint8_t>> seen;
        std::vector<graph> next;
        for (const graph& h : level)
            for (uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                graph g = h;
                vertex v = g.add_vertex();
                for (int u = 0; u < m - 1; ++u)
                    if (mask >> u & 1)
                        g.add_edge(u, v);
                if (seen.insert(canonical_code(g)).second)
                    next.push_back(std::move(g));
            }
        level = std::move(next);
    }
    std::vector<graph> out;
    for (auto& g : level)
        if (g.is_connected())
            out.push_back(std::move(g));
    return out;
}

} // namespace oddcolor::gen
