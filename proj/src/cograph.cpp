#include "oddcolor/cograph.hpp"

#include <algorithm>
#include <numeric>

namespace oddcolor {

namespace {

struct builder {
    const graph& g;
    cotree t;
    std::optional<std::array<vertex, 4>> p4;

    // Sub-lists of `vs` given components of an induced copy.
    static std::vector<std::vector<vertex>> lift(const std::vector<std::vector<vertex>>& comps,
                                                 const std::vector<vertex>& vs)
    {
        std::vector<std::vector<vertex>> out;
        for (const auto& c : comps) {
            out.emplace_back();
            for (vertex i : c)
                out.back().push_back(vs[i]);
        }
        return out;
    }

    std::optional<std::array<vertex, 4>> find_p4(const std::vector<vertex>& vs) const
    {
        std::vector<char> in(static_cast<size_t>(g.num_vertices()), 0);
        for (vertex v : vs)
            in[v] = 1;
        for (vertex b : vs)
            for (vertex c : g.neighbors(b)) {
                if (!in[c])
                    continue;
                for (vertex a : g.neighbors(b)) {
                    if (!in[a] || a == c || g.adjacent(a, c))
                        continue;
                    for (vertex d : g.neighbors(c))
                        if (in[d] && d != b && d != a && !g.adjacent(d, b) && !g.adjacent(d, a))
                            return std::array<vertex, 4>{a, b, c, d};
                }
            }
        return std::nullopt;
    }

    int build(const std::vector<vertex>& vs)
    {
        cotree_node node;
        node.vertices = vs;
        if (vs.size() == 1) {
            node.v = vs[0];
            t.nodes.push_back(node);
            return static_cast<int>(t.nodes.size()) - 1;
        }
        graph h = g.induced(vs);
        auto parts = lift(h.components(), vs);
        if (parts.size() > 1)
            node.kind = cotree_kind::union_node;
        else {
            parts = lift(h.complement().components(), vs);
            if (parts.size() == 1) {
                p4 = find_p4(vs);
                return -1;
            }
            node.kind = cotree_kind::join_node;
        }
        for (const auto& p : parts) {
            int c = build(p);
            if (c < 0)
                return -1;
            node.children.push_back(c);
        }
        t.nodes.push_back(node);
        return static_cast<int>(t.nodes.size()) - 1;
    }
};

// Per node: for k = 0..s (s = node size; k > s behaves as k = s) the set of
// achievable counts j of odd-size color classes, over proper (P) and odd (O)
// colorings using colors from [k].
struct profile {
    int s = 0;
    std::vector<std::vector<char>> P, O;

    int clamp(int k) const { return std::min(k, s); }
    bool p(int k, int j) const { k = clamp(k); return j >= 0 && j <= k && P[k][j]; }
    bool o(int k, int j) const { k = clamp(k); return j >= 0 && j <= k && O[k][j]; }
};

profile make(int s)
{
    profile pr;
    pr.s = s;
    pr.P.assign(static_cast<size_t>(s + 1), {});
    pr.O.assign(static_cast<size_t>(s + 1), {});
    for (int k = 0; k <= s; ++k) {
        pr.P[k].assign(static_cast<size_t>(k + 1), 0);
        pr.O[k].assign(static_cast<size_t>(k + 1), 0);
    }
    return pr;
}

profile leaf_profile()
{
    profile pr = make(1);
    pr.P[1][1] = 1;
    return pr;
}

// Overlap i of odd sets ranges over [max(0, j1+j2-k), min(j1, j2)].
template <class F>
void union_results(int k, int j1, int j2, F&& emit)
{
    for (int i = std::max(0, j1 + j2 - k); i <= std::min(j1, j2); ++i)
        emit(j1 + j2 - 2 * i, i);
}

profile union_profile(const profile& a, const profile& b)
{
    profile pr = make(a.s + b.s);
    for (int k = 0; k <= pr.s; ++k)
        for (int j1 = 0; j1 <= std::min(k, a.s); ++j1)
            for (int j2 = 0; j2 <= std::min(k, b.s); ++j2) {
                bool pp = a.p(k, j1) && b.p(k, j2);
                bool oo = a.o(k, j1) && b.o(k, j2);
                if (!pp)
                    continue;
                union_results(k, j1, j2, [&](int j, int) {
                    pr.P[k][j] = 1;
                    if (oo)
                        pr.O[k][j] = 1;
                });
            }
    return pr;
}

// Each side's vertices see the other side's classes entirely; that alone
// supplies an odd color iff the other side has an odd class.
bool join_odd_ok(const profile& a, const profile& b, int k1, int j1, int k2, int j2)
{
    bool side1 = a.o(k1, j1) || (a.p(k1, j1) && j2 >= 1);
    bool side2 = b.o(k2, j2) || (b.p(k2, j2) && j1 >= 1);
    return side1 && side2;
}

profile join_profile(const profile& a, const profile& b)
{
    profile pr = make(a.s + b.s);
    for (int k1 = 0; k1 <= a.s; ++k1)
        for (int k2 = 0; k2 <= b.s; ++k2)
            for (int j1 = 0; j1 <= k1; ++j1) {
                if (!a.p(k1, j1))
                    continue;
                for (int j2 = 0; j2 <= k2; ++j2) {
                    if (!b.p(k2, j2))
                        continue;
                    int k = k1 + k2;
                    // Larger palettes inherit: fill every k' >= k up to s.
                    pr.P[k][j1 + j2] = 1;
                    if (join_odd_ok(a, b, k1, j1, k2, j2))
                        pr.O[k][j1 + j2] = 1;
                }
            }
    for (int k = 1; k <= pr.s; ++k)
        for (int j = 0; j < k; ++j) {
            pr.P[k][j] = pr.P[k][j] | pr.P[k - 1][j];
            pr.O[k][j] = pr.O[k][j] | pr.O[k - 1][j];
        }
    return pr;
}

struct evaluator {
    const cotree& t;
    // Binary left folds of each inner node: fold[node][i] is the profile of
    // children 0..i combined.
    std::vector<std::vector<profile>> fold;
    std::vector<profile> leafp;

    explicit evaluator(const cotree& tree) : t(tree), fold(tree.nodes.size())
    {
        if (t.root >= 0)
            eval(t.root);
    }

    const profile& of(int node) const { return fold[node].back(); }

    void eval(int x)
    {
        const auto& nd = t.nodes[x];
        if (nd.kind == cotree_kind::leaf) {
            fold[x] = {leaf_profile()};
            return;
        }
        for (int c : nd.children)
            eval(c);
        fold[x] = {of(nd.children[0])};
        for (size_t i = 1; i < nd.children.size(); ++i) {
            const profile& acc = fold[x].back();
            const profile& nxt = of(nd.children[i]);
            fold[x].push_back(nd.kind == cotree_kind::union_node ? union_profile(acc, nxt) : join_profile(acc, nxt));
        }
    }
};

chi_value first_k(const profile& pr, bool odd, bool strong)
{
    for (int k = 0; k <= pr.s; ++k)
        for (int j = strong ? 1 : 0; j <= k; ++j)
            if (odd ? pr.o(k, j) : pr.p(k, j))
                return k;
    return chi_value::unbounded();
}

// Top-down witness construction.
struct painter {
    const cotree& t;
    const evaluator& ev;
    coloring f;

    // Colors the vertices below `x` (children 0..upto folded) with colors
    // 1..k, exactly j odd classes, odd coloring iff `odd`.
    void paint(int x, size_t upto, int k, int j, bool odd)
    {
        const auto& nd = t.nodes[x];
        if (nd.kind == cotree_kind::leaf) {
            f[nd.v] = 1;
            return;
        }
        if (upto == 0) {
            int c = nd.children[0];
            paint(c, fold_last(c), k, j, odd);
            return;
        }
        const profile& a = ev.fold[x][upto - 1];
        int cx = nd.children[upto];
        const profile& b = ev.of(cx);
        auto has = [&](const profile& p, int kk, int jj, bool od) { return od ? p.o(kk, jj) : p.p(kk, jj); };
        if (nd.kind == cotree_kind::union_node) {
            for (int j1 = 0; j1 <= std::min(k, a.s); ++j1)
                for (int j2 = 0; j2 <= std::min(k, b.s); ++j2) {
                    if (!has(a, k, j1, odd) || !has(b, k, j2, odd))
                        continue;
                    int overlap = -1;
                    union_results(k, j1, j2, [&](int jj, int i) {
                        if (jj == j)
                            overlap = i;
                    });
                    if (overlap < 0)
                        continue;
                    paint(x, upto - 1, k, j1, odd);
                    paint(cx, fold_last(cx), k, j2, odd);
                    align(x, upto, cx, k, overlap);
                    return;
                }
        } else {
            for (int k1 = 0; k1 <= std::min(k, a.s); ++k1)
                for (int k2 = 0; k1 + k2 <= k && k2 <= b.s; ++k2)
                    for (int j1 = 0; j1 <= std::min(j, k1); ++j1) {
                        int j2 = j - j1;
                        if (j2 > k2 || !a.p(k1, j1) || !b.p(k2, j2))
                            continue;
                        if (odd && !join_odd_ok(a, b, k1, j1, k2, j2))
                            continue;
                        bool odd1 = odd && j2 == 0;
                        bool odd2 = odd && j1 == 0;
                        paint(x, upto - 1, k1, j1, odd1);
                        paint(cx, fold_last(cx), k2, j2, odd2);
                        for (vertex v : t.nodes[cx].vertices)
                            f[v] += k1;
                        return;
                    }
        }
        throw contract_violation("cotree witness reconstruction failed");
    }

    size_t fold_last(int c) const { return ev.fold[c].size() - 1; }

    // Permutes the colors of child cx so that exactly `overlap` of its odd
    // classes coincide with odd classes of the already painted prefix.
    void align(int x, size_t upto, int cx, int k, int overlap)
    {
        std::vector<int> cnt1(static_cast<size_t>(k + 1), 0), cnt2(static_cast<size_t>(k + 1), 0);
        const auto& nd = t.nodes[x];
        for (size_t i = 0; i < upto; ++i)
            for (vertex v : t.nodes[nd.children[i]].vertices)
                ++cnt1[f[v]];
        for (vertex v : t.nodes[cx].vertices)
            ++cnt2[f[v]];
        std::vector<color> odd1, rest1, odd2, rest2;
        for (color c = 1; c <= k; ++c) {
            (cnt1[c] % 2 ? odd1 : rest1).push_back(c);
            (cnt2[c] % 2 ? odd2 : rest2).push_back(c);
        }
        std::vector<color> target;
        std::vector<char> taken(static_cast<size_t>(k + 1), 0);
        auto take = [&](color c) {
            taken[c] = 1;
            target.push_back(c);
        };
        for (size_t i = 0; i < odd2.size(); ++i) {
            if (static_cast<int>(i) < overlap)
                take(odd1[i]);
            else
                take(rest1[i - overlap]);
        }
        std::vector<color> perm(static_cast<size_t>(k + 1), 0);
        for (size_t i = 0; i < odd2.size(); ++i)
            perm[odd2[i]] = target[i];
        color next = 1;
        for (color c : rest2) {
            while (taken[next])
                ++next;
            perm[c] = next;
            taken[next] = 1;
        }
        for (vertex v : t.nodes[cx].vertices)
            f[v] = perm[f[v]];
    }
};

} // namespace

cotree_result build_cotree(const graph& g)
{
    builder b{g, {}, std::nullopt};
    b.t.num_vertices = g.num_vertices();
    if (g.num_vertices() == 0)
        return {b.t, std::nullopt};
    std::vector<vertex> all(static_cast<size_t>(g.num_vertices()));
    std::iota(all.begin(), all.end(), 0);
    int root = b.build(all);
    if (root < 0)
        return {std::nullopt, b.p4};
    b.t.root = root;
    return {std::move(b.t), std::nullopt};
}

graph realize(const cotree& t)
{
    graph g(t.num_vertices);
    for (const auto& nd : t.nodes) {
        if (nd.kind != cotree_kind::join_node)
            continue;
        for (size_t i = 0; i < nd.children.size(); ++i)
            for (size_t j = i + 1; j < nd.children.size(); ++j)
                for (vertex u : t.nodes[nd.children[i]].vertices)
                    for (vertex v : t.nodes[nd.children[j]].vertices)
                        g.add_edge(u, v);
    }
    return g;
}

invariant_tuple cograph_invariants(const cotree& t)
{
    if (t.root < 0)
        return {0, chi_value::unbounded(), 0, chi_value::unbounded()};
    evaluator ev(t);
    const profile& pr = ev.of(t.root);
    return {first_k(pr, false, false), first_k(pr, false, true), first_k(pr, true, false), first_k(pr, true, true)};
}

oracle_result cograph_solve(const cotree& t, invariant which)
{
    bool odd = which == invariant::chi_odd || which == invariant::chi_odd_strong;
    bool strong = which == invariant::chi_strong || which == invariant::chi_odd_strong;
    if (t.root < 0)
        return strong ? oracle_result{chi_value::unbounded(), std::nullopt} : oracle_result{0, coloring(0, 0)};
    evaluator ev(t);
    const profile& pr = ev.of(t.root);
    chi_value v = first_k(pr, odd, strong);
    if (v.is_unbounded())
        return {v, std::nullopt};
    int k = v.value();
    int j = strong ? 1 : 0;
    while (!(odd ? pr.o(k, j) : pr.p(k, j)))
        ++j;
    painter p{t, ev, coloring(t.num_vertices, k)};
    p.paint(t.root, ev.fold[t.root].size() - 1, k, j, odd);
    return {v, std::move(p.f)};
}

invariant_tuple join_tuples(const invariant_tuple& a, const invariant_tuple& b)
{
    invariant_tuple r;
    r.chi = a.chi + b.chi;
    r.chi_odd = std::min({a.chi_odd + b.chi_odd, a.chi_strong + b.chi_strong, a.chi_odd_strong + b.chi,
                          a.chi + b.chi_odd_strong});
    r.chi_strong = std::min(a.chi_strong + b.chi, a.chi + b.chi_strong);
    r.chi_odd_strong = std::min({a.chi_strong + b.chi_strong, a.chi_odd_strong + b.chi, a.chi + b.chi_odd_strong});
    return r;
}

} // namespace oddcolor
