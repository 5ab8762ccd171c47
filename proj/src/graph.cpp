#include "oddcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace oddcolor {

graph::graph(int n) : n_(n), adj_(static_cast<size_t>(n)), mat_(static_cast<size_t>(n) * n, 0)
{
    if (n < 0)
        throw contract_violation("negative vertex count");
}

graph::graph(int n, std::span<const std::pair<vertex, vertex>> edges) : graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void graph::check_vertex(vertex v) const
{
    if (v < 0 || v >= n_)
        throw contract_violation("vertex " + std::to_string(v) + " out of range");
}

bool graph::add_edge(vertex u, vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw contract_violation("self-loop on vertex " + std::to_string(u));
    if (adjacent(u, v))
        return false;
    mat_[static_cast<size_t>(u) * n_ + v] = mat_[static_cast<size_t>(v) * n_ + u] = 1;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
    return true;
}

bool graph::remove_edge(vertex u, vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adjacent(u, v))
        return false;
    mat_[static_cast<size_t>(u) * n_ + v] = mat_[static_cast<size_t>(v) * n_ + u] = 0;
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --m_;
    return true;
}

vertex graph::add_vertex()
{
    std::vector<char> mat(static_cast<size_t>(n_ + 1) * (n_ + 1), 0);
    for (int u = 0; u < n_; ++u)
        std::copy_n(mat_.begin() + static_cast<ptrdiff_t>(u) * n_, n_, mat.begin() + static_cast<ptrdiff_t>(u) * (n_ + 1));
    mat_ = std::move(mat);
    adj_.emplace_back();
    return n_++;
}

std::vector<std::pair<vertex, vertex>> graph::edges() const
{
    std::vector<std::pair<vertex, vertex>> out;
    out.reserve(static_cast<size_t>(m_));
    for (vertex u = 0; u < n_; ++u)
        for (vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

graph graph::induced(std::span<const vertex> keep) const
{
    graph h(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                h.add_edge(static_cast<vertex>(i), static_cast<vertex>(j));
    return h;
}

graph graph::complement() const
{
    graph h(n_);
    for (vertex u = 0; u < n_; ++u)
        for (vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v))
                h.add_edge(u, v);
    return h;
}

graph graph::relabel(std::span<const vertex> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw contract_violation("permutation size mismatch");
    graph h(n_);
    for (auto [u, v] : edges())
        h.add_edge(perm[u], perm[v]);
    return h;
}

bool graph::has_isolated_vertex() const
{
    return std::any_of(adj_.begin(), adj_.end(), [](const auto& a) { return a.empty(); });
}

bool graph::is_clique(std::span<const vertex> vs) const
{
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!adjacent(vs[i], vs[j]))
                return false;
    return true;
}

bool graph::is_independent(std::span<const vertex> vs) const
{
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j]))
                return false;
    return true;
}

std::vector<std::vector<vertex>> graph::components() const
{
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    std::vector<std::vector<vertex>> out;
    for (vertex s = 0; s < n_; ++s) {
        if (comp[s] >= 0)
            continue;
        out.emplace_back();
        auto& c = out.back();
        comp[s] = static_cast<int>(out.size()) - 1;
        c.push_back(s);
        for (size_t i = 0; i < c.size(); ++i)
            for (vertex w : adj_[c[i]])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    c.push_back(w);
                }
        std::sort(c.begin(), c.end());
    }
    return out;
}

bool graph::is_connected() const { return components().size() <= 1; }

uint64_t graph::neighbor_mask(vertex v) const
{
    if (n_ > 64)
        throw contract_violation("neighbor_mask requires at most 64 vertices");
    uint64_t m = 0;
    for (vertex w : adj_[v])
        m |= uint64_t{1} << w;
    return m;
}

bool coloring::is_total() const
{
    return std::all_of(colors.begin(), colors.end(), [](color c) { return c != 0; });
}

int coloring::used_colors() const
{
    std::vector<color> cs;
    for (color c : colors)
        if (c != 0)
            cs.push_back(c);
    std::sort(cs.begin(), cs.end());
    return static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

coloring coloring::compacted() const
{
    std::unordered_map<color, color> ren;
    coloring out(size(), 0);
    for (int v = 0; v < size(); ++v) {
        if (colors[v] == 0)
            continue;
        auto [it, fresh] = ren.try_emplace(colors[v], static_cast<color>(ren.size()) + 1);
        out.colors[v] = it->second;
    }
    out.k = static_cast<int>(ren.size());
    return out;
}

std::vector<vertex> odd_certificate::violations() const
{
    std::vector<vertex> all = no_odd_color;
    all.insert(all.end(), improper.begin(), improper.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace {

void require_total(const graph& g, const coloring& f)
{
    if (f.size() != g.num_vertices())
        throw contract_violation("coloring size does not match graph");
    if (!f.is_total())
        throw contract_violation("coloring is partial");
}

} // namespace

bool is_proper(const graph& g, const coloring& f)
{
    require_total(g, f);
    for (auto [u, v] : g.edges())
        if (f[u] == f[v])
            return false;
    return true;
}

std::optional<color> odd_color_of(const graph& g, const coloring& f, vertex v)
{
    std::map<color, int> count;
    for (vertex w : g.neighbors(v)) {
        if (!f.assigned(w))
            throw contract_violation("coloring is partial on N(v)");
        ++count[f[w]];
    }
    for (auto [c, m] : count)
        if (m % 2 == 1)
            return c;
    return std::nullopt;
}

odd_certificate verify_odd_coloring(const graph& g, const coloring& f)
{
    require_total(g, f);
    odd_certificate cert;
    cert.witness.resize(static_cast<size_t>(g.num_vertices()));
    std::vector<char> bad(static_cast<size_t>(g.num_vertices()), 0);
    for (auto [u, v] : g.edges())
        if (f[u] == f[v])
            bad[u] = bad[v] = 1;
    for (vertex v = 0; v < g.num_vertices(); ++v) {
        cert.witness[v] = odd_color_of(g, f, v);
        if (!cert.witness[v])
            cert.no_odd_color.push_back(v);
        if (bad[v])
            cert.improper.push_back(v);
    }
    return cert;
}

bool is_odd_coloring(const graph& g, const coloring& f)
{
    return f.size() == g.num_vertices() && f.is_total() && verify_odd_coloring(g, f).valid();
}

std::map<color, parity> color_class_parities(const graph& g, const coloring& f)
{
    require_total(g, f);
    std::map<color, int> count;
    for (color c : f.colors)
        ++count[c];
    std::map<color, parity> out;
    for (auto [c, m] : count)
        out[c] = (m % 2) ? parity::odd : parity::even;
    return out;
}

bool has_odd_class(const coloring& f)
{
    std::map<color, int> count;
    for (color c : f.colors)
        if (c != 0)
            ++count[c];
    return std::any_of(count.begin(), count.end(), [](const auto& e) { return e.second % 2 == 1; });
}

} // namespace oddcolor
