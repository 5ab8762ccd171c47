#include "oddcolor/split.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace oddcolor {

namespace {

const std::vector<vertex> no_vertices;

std::vector<vertex> k_neighbors(const graph& g, vertex u, const std::vector<char>& in_k)
{
    std::vector<vertex> out;
    for (vertex w : g.neighbors(u))
        if (in_k[w])
            out.push_back(w);
    return out;
}

std::vector<vertex> without(const std::vector<vertex>& K, vertex w)
{
    std::vector<vertex> out;
    for (vertex v : K)
        if (v != w)
            out.push_back(v);
    return out;
}

// Smallest color in [1, k] not used on N(u) and not in `avoid`; 0 if none.
color free_color(const graph& g, const coloring& f, vertex u, int k, const std::vector<color>& avoid = {})
{
    std::vector<char> bad(static_cast<size_t>(k + 1), 0);
    for (vertex w : g.neighbors(u))
        if (f[w] > 0 && f[w] <= k)
            bad[f[w]] = 1;
    for (color c : avoid)
        if (c > 0 && c <= k)
            bad[c] = 1;
    for (color c = 1; c <= k; ++c)
        if (!bad[c])
            return c;
    return 0;
}

struct builder {
    const graph& g;
    const split_partition& sp;
    int k;
    std::vector<color> fk;  // color of each K vertex, indexed by vertex
    coloring f;

    builder(const graph& gr, const split_partition& s)
        : g(gr), sp(s), k(static_cast<int>(s.K.size())), fk(static_cast<size_t>(gr.num_vertices()), 0),
          f(gr.num_vertices(), static_cast<int>(s.K.size()))
    {
        for (int i = 0; i < k; ++i)
            f[sp.K[i]] = fk[sp.K[i]] = i + 1;
    }

    void paint_cell(vertex w)
    {
        for (vertex u : sp.all_but(w))
            f[u] = fk[w];
    }

    // Uncolored I-vertices get the lowest proper color avoiding `avoid`,
    // else the lowest proper color.
    void fill(const std::vector<vertex>& us, const std::vector<color>& avoid)
    {
        for (vertex u : us) {
            if (f[u] != 0)
                continue;
            color c = free_color(g, f, u, k, avoid);
            f[u] = c ? c : free_color(g, f, u, k);
        }
    }

    std::vector<vertex> uncolored_i() const
    {
        std::vector<vertex> out;
        for (vertex u : sp.I)
            if (f[u] == 0)
                out.push_back(u);
        return out;
    }

    void case_1a(vertex w, vertex z)
    {
        paint_cell(w);
        paint_cell(z);
        for (vertex y : sp.K)
            if (y != w && y != z)
                paint_cell(y);
        std::vector<vertex> in_nw, rest;
        for (vertex u : uncolored_i())
            (g.adjacent(u, w) ? in_nw : rest).push_back(u);
        fill(in_nw, {fk[z]});
        fill(rest, {fk[w]});
    }

    void case_1b(vertex w)
    {
        for (vertex y : sp.K)
            paint_cell(y);
        std::vector<vertex> dw, rest;
        for (vertex u : uncolored_i())
            (g.adjacent(u, w) ? dw : rest).push_back(u);
        vertex w1 = dw.front();
        color cw = free_color(g, f, w1, k);
        f[w1] = cw;
        fill(dw, {cw});
        fill(rest, {fk[w]});
    }

    // Peeling of the remaining I-vertices by highest degree into the
    // shrinking clique, then backward color choices.
    void case_2()
    {
        for (vertex y : sp.K)
            paint_cell(y);
        std::vector<vertex> iprime = uncolored_i();
        std::vector<char> in_k(static_cast<size_t>(g.num_vertices()), 0);
        for (vertex v : sp.K)
            in_k[v] = 1;
        std::vector<char> alive_i(static_cast<size_t>(g.num_vertices()), 0);
        for (vertex u : iprime)
            alive_i[u] = 1;
        auto deg_in = [&](vertex u) {
            int d = 0;
            for (vertex w : g.neighbors(u))
                d += in_k[w];
            return d;
        };
        std::vector<vertex> p;
        std::vector<std::vector<vertex>> Q, R;
        auto kleft = [&] { return std::any_of(sp.K.begin(), sp.K.end(), [&](vertex v) { return in_k[v] != 0; }); };
        while (kleft()) {
            vertex u = -1;
            for (vertex x : iprime)
                if (alive_i[x] && (u < 0 || deg_in(x) > deg_in(u)))
                    u = x;
            if (u < 0)
                break;
            std::vector<vertex> q = k_neighbors(g, u, in_k);
            std::vector<vertex> r;
            for (vertex x : iprime) {
                if (!alive_i[x] || x == u)
                    continue;
                auto nx = k_neighbors(g, x, in_k);
                if (std::includes(q.begin(), q.end(), nx.begin(), nx.end()))
                    r.push_back(x);
            }
            for (vertex v : q)
                in_k[v] = 0;
            alive_i[u] = 0;
            for (vertex x : r)
                alive_i[x] = 0;
            p.push_back(u);
            Q.push_back(q);
            R.push_back(r);
        }
        int ell = 0;
        for (size_t j = 0; j < Q.size(); ++j)
            if (!Q[j].empty())
                ell = static_cast<int>(j) + 1;
        if (ell == 0)
            return;
        auto pick_from = [&](const std::vector<vertex>& qs, vertex u) {
            for (vertex v : qs)
                if (!g.adjacent(u, v))
                    return fk[v];
            return qs.empty() ? 0 : fk[qs.front()];
        };
        f[p[0]] = pick_from(Q[ell - 1], p[0]);
        for (int j = 2; j <= ell; ++j)
            f[p[j - 1]] = pick_from(Q[j - 2], p[j - 1]);
        std::vector<color> used_p;
        for (int j = 1; j <= ell; ++j) {
            used_p.push_back(f[p[j - 1]]);
            for (vertex v : R[j - 1])
                f[v] = free_color(g, f, v, k, used_p);
        }
        // Leftovers past ell keep clear of the p colors where they can.
        fill(uncolored_i(), used_p);
    }
};

// Recolors the unforced I-vertices: while some K-vertex sees every color an
// even number of times, move one of its unforced I-neighbors to another
// allowed color (that always fixes the chosen vertex). Bounded, seeded.
bool repair(const graph& g, const split_partition& sp, coloring& f, int k)
{
    int n = g.num_vertices();
    std::vector<char> movable(static_cast<size_t>(n), 0);
    for (vertex u : sp.I)
        movable[u] = 1;
    for (vertex w : sp.K)
        for (vertex u : sp.all_but(w))
            movable[u] = 0;
    f.k = k;
    return odd_repair(g, f, movable, 20 * n + 200);
}

} // namespace

const std::vector<vertex>& split_partition::all_but(vertex w) const
{
    auto it = tcells.find(without(K, w));
    return it == tcells.end() ? no_vertices : it->second;
}

std::optional<split_partition> split_partition_of(const graph& g)
{
    int n = g.num_vertices();
    std::vector<vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i)
            m = i + 1;
    long long lhs = 0, rhs = 1LL * m * (m - 1);
    for (int i = 0; i < n; ++i)
        (i < m ? lhs : rhs) += g.degree(order[i]);
    if (lhs != rhs)
        return std::nullopt;
    std::vector<char> in_k(static_cast<size_t>(n), 0);
    for (int i = 0; i < m; ++i)
        in_k[order[i]] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        int ksize = static_cast<int>(std::count(in_k.begin(), in_k.end(), 1));
        for (vertex u = 0; u < n && !grew; ++u)
            if (!in_k[u] && static_cast<int>(k_neighbors(g, u, in_k).size()) == ksize) {
                in_k[u] = 1;
                grew = true;
            }
    }
    std::vector<vertex> K;
    for (vertex v = 0; v < n; ++v)
        if (in_k[v])
            K.push_back(v);
    return make_split_partition(g, K);
}

split_partition make_split_partition(const graph& g, std::vector<vertex> K)
{
    int n = g.num_vertices();
    std::sort(K.begin(), K.end());
    std::vector<char> in_k(static_cast<size_t>(n), 0);
    for (vertex v : K)
        in_k[v] = 1;
    split_partition sp;
    sp.K = K;
    for (vertex v = 0; v < n; ++v)
        if (!in_k[v])
            sp.I.push_back(v);
    if (!g.is_clique(sp.K) || !g.is_independent(sp.I))
        throw contract_violation("not a split partition");
    for (vertex u : sp.I)
        sp.tcells[k_neighbors(g, u, in_k)].push_back(u);
    return sp;
}

std::string to_string(split_case c)
{
    switch (c) {
    case split_case::degenerate: return "degenerate";
    case split_case::two_clique: return "two_clique";
    case split_case::empty_neighborhood: return "empty_neighborhood";
    case split_case::predicate: return "predicate";
    case split_case::case_1a: return "case_1a";
    case split_case::case_1b: return "case_1b";
    case split_case::case_2: return "case_2";
    }
    return "?";
}

std::optional<vertex> split_predicate_vertex(const graph& g, const split_partition& sp)
{
    for (vertex v : sp.K) {
        bool ok = true;
        std::vector<vertex> uni;
        for (vertex w : sp.K) {
            if (w == v)
                continue;
            const auto& t = sp.all_but(w);
            if (t.size() % 2 == 0) {
                ok = false;
                break;
            }
            uni.insert(uni.end(), t.begin(), t.end());
        }
        if (!ok)
            continue;
        std::sort(uni.begin(), uni.end());
        std::vector<vertex> nv;
        for (vertex u : g.neighbors(v))
            if (std::binary_search(sp.I.begin(), sp.I.end(), u))
                nv.push_back(u);
        if (nv == uni)
            return v;
    }
    return std::nullopt;
}

split_result chi_odd_split(const graph& g, const split_partition& sp)
{
    int k = static_cast<int>(sp.K.size());
    split_result res;
    if (g.has_isolated_vertex() || g.num_vertices() == 0) {
        res.value = g.num_vertices() == 0 ? chi_value(0) : chi_value::unbounded();
        if (g.num_vertices() == 0)
            res.witness = coloring(0, 0);
        return res;
    }
    builder b(g, sp);
    auto finish = [&](int value, split_case c) {
        b.f.k = value;
        res.value = value;
        res.taken = c;
        if (!is_odd_coloring(g, b.f)) {
            res.fallback = true;
            if (c != split_case::predicate && repair(g, sp, b.f, value)) {
                res.witness = b.f;
                res.fallback_by = "repair";
                return res;
            }
            res.fallback_by = "extension";
            coloring pre(g.num_vertices(), value);
            for (vertex v : sp.K)
                pre[v] = b.fk[v];
            oracle_options opt{std::max(24, g.num_vertices())};
            auto ext = odd_colorable_with(g, value, pre, extension_mode::odd, opt);
            if (!ext)
                throw contract_violation("split construction and exact extension both failed");
            b.f = *ext;
        }
        res.witness = b.f;
        return res;
    };
    if (k == 2) {
        vertex v1 = sp.K[0], v2 = sp.K[1];
        auto i1 = sp.all_but(v2), i2 = sp.all_but(v1);
        if (i1.size() % 2 == 0 && i2.size() % 2 == 0) {
            for (vertex u : i1)
                b.f[u] = 2;
            for (vertex u : i2)
                b.f[u] = 1;
            return finish(2, split_case::two_clique);
        }
        for (vertex u : sp.I)
            b.f[u] = 3;
        return finish(3, split_case::two_clique);
    }
    // k >= 3 from here (k <= 1 always has an isolated vertex).
    for (vertex vp : sp.K)
        if (std::none_of(g.neighbors(vp).begin(), g.neighbors(vp).end(),
                         [&](vertex u) { return std::binary_search(sp.I.begin(), sp.I.end(), u); })) {
            for (vertex u : sp.I)
                b.f[u] = b.fk[vp];
            return finish(k, split_case::empty_neighborhood);
        }
    if (auto v = split_predicate_vertex(g, sp)) {
        res.predicate_vertex = v;
        for (vertex u : sp.I)
            b.f[u] = k + 1;
        return finish(k + 1, split_case::predicate);
    }
    vertex w = -1;
    for (vertex y : sp.K)
        if (sp.all_but(y).size() % 2 == 0) {
            w = y;
            break;
        }
    if (w >= 0) {
        for (vertex z : sp.K)
            if (z != w && sp.all_but(z).size() % 2 == 0) {
                b.case_1a(w, z);
                return finish(k, split_case::case_1a);
            }
        b.case_1b(w);
        return finish(k, split_case::case_1b);
    }
    b.case_2();
    return finish(k, split_case::case_2);
}

} // namespace oddcolor
