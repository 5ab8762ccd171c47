#include "oddcolor/modulator.hpp"

#include <algorithm>
#include <array>

#include "oddcolor/oracle.hpp"

namespace oddcolor {

namespace {

// Vertex cover of the edges among `alive` vertices, size <= budget.
bool cover(const graph& g, std::vector<char>& alive, int budget, std::vector<vertex>& out)
{
    int n = g.num_vertices();
    for (vertex u = 0; u < n; ++u) {
        if (!alive[u])
            continue;
        for (vertex v : g.neighbors(u)) {
            if (v < u || !alive[v])
                continue;
            if (budget == 0)
                return false;
            for (vertex pick : {u, v}) {
                alive[pick] = 0;
                out.push_back(pick);
                if (cover(g, alive, budget - 1, out))
                    return true;
                out.pop_back();
                alive[pick] = 1;
            }
            return false;
        }
    }
    return true;
}

// First induced P3 a-b-c (ab, bc edges, ac missing) among alive vertices.
std::optional<std::array<vertex, 3>> find_p3(const graph& g, const std::vector<char>& alive)
{
    int n = g.num_vertices();
    for (vertex b = 0; b < n; ++b) {
        if (!alive[b])
            continue;
        const auto& nb = g.neighbors(b);
        for (size_t i = 0; i < nb.size(); ++i) {
            if (!alive[nb[i]])
                continue;
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (alive[nb[j]] && !g.adjacent(nb[i], nb[j]))
                    return std::array<vertex, 3>{nb[i], b, nb[j]};
        }
    }
    return std::nullopt;
}

bool hit_p3s(const graph& g, std::vector<char>& alive, int budget, std::vector<vertex>& out)
{
    auto p = find_p3(g, alive);
    if (!p)
        return true;
    if (budget == 0)
        return false;
    for (vertex pick : *p) {
        alive[pick] = 0;
        out.push_back(pick);
        if (hit_p3s(g, alive, budget - 1, out))
            return true;
        out.pop_back();
        alive[pick] = 1;
    }
    return false;
}

template <class F>
std::optional<std::vector<vertex>> smallest(int n, int budget, F&& attempt)
{
    for (int b = 0; b <= budget; ++b) {
        std::vector<char> alive(static_cast<size_t>(n), 1);
        std::vector<vertex> out;
        if (attempt(alive, b, out)) {
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<vertex>> find_clique_modulator(const graph& g, int budget)
{
    if (budget > 10)
        throw guard_exceeded("clique modulator budget above 10");
    graph h = g.complement();
    return smallest(g.num_vertices(), budget,
                    [&](auto& alive, int b, auto& out) { return cover(h, alive, b, out); });
}

std::optional<std::vector<vertex>> find_cluster_modulator(const graph& g, int budget)
{
    if (budget > 8)
        throw guard_exceeded("cluster modulator budget above 8");
    return smallest(g.num_vertices(), budget,
                    [&](auto& alive, int b, auto& out) { return hit_p3s(g, alive, b, out); });
}

std::optional<std::vector<vertex>> find_cocluster_modulator(const graph& g, int budget)
{
    return find_cluster_modulator(g.complement(), budget);
}

bool is_cluster_graph(const graph& g)
{
    std::vector<char> alive(static_cast<size_t>(g.num_vertices()), 1);
    return !find_p3(g, alive).has_value();
}

std::vector<vertex> complement_set(int n, const std::vector<vertex>& xs)
{
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (vertex x : xs)
        in[x] = 1;
    std::vector<vertex> out;
    for (vertex v = 0; v < n; ++v)
        if (!in[v])
            out.push_back(v);
    return out;
}

} // namespace oddcolor
