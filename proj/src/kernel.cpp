#include "oddcolor/kernel.hpp"

#include <algorithm>

#include "oddcolor/modulator.hpp"
#include "oddcolor/oracle.hpp"

namespace oddcolor {

namespace {

int clique_degree(const graph& g, vertex x, const std::vector<char>& in_x)
{
    int c = 0;
    for (vertex w : g.neighbors(x))
        c += in_x[w] ? 0 : 1;
    return c;
}

std::vector<char> membership(int n, const std::vector<vertex>& xs)
{
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (vertex x : xs)
        in[x] = 1;
    return in;
}

// Keeps the vertices not flagged in `drop`, renumbered in order; maps X along.
dclique_instance drop_vertices(const dclique_instance& inst, const std::vector<char>& drop)
{
    int n = inst.g.num_vertices();
    std::vector<vertex> keep;
    std::vector<vertex> idx(static_cast<size_t>(n), -1);
    for (vertex v = 0; v < n; ++v)
        if (!drop[v]) {
            idx[v] = static_cast<vertex>(keep.size());
            keep.push_back(v);
        }
    dclique_instance out{inst.g.induced(keep), {}, inst.k};
    for (vertex x : inst.X)
        if (!drop[x])
            out.X.push_back(idx[x]);
    return out;
}

} // namespace

std::vector<vertex> dclique_instance::clique() const { return complement_set(g.num_vertices(), X); }

void check_instance(const dclique_instance& inst)
{
    auto c = inst.clique();
    if (!inst.g.is_clique(c))
        throw contract_violation("G - X is not a clique");
    auto sorted = inst.X;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw contract_violation("modulator lists a vertex twice");
}

modulator_partition partition_modulator(const dclique_instance& inst)
{
    const graph& g = inst.g;
    int n = g.num_vertices();
    long long d = inst.d();
    auto in_x = membership(n, inst.X);
    modulator_partition p;
    for (vertex x : inst.X) {
        long long cd = clique_degree(g, x, in_x);
        if (cd <= d - 1)
            p.X_low.push_back(x);
        else if (cd <= n - d * d - d - 1)
            p.X_mid.push_back(x);
        else
            p.X_high.push_back(x);
    }
    for (auto* s : {&p.X_low, &p.X_mid, &p.X_high})
        std::sort(s->begin(), s->end());
    auto in_mid = membership(n, p.X_mid);
    for (vertex x : p.X_low)
        if (std::any_of(g.neighbors(x).begin(), g.neighbors(x).end(), [&](vertex w) { return in_mid[w] != 0; }))
            p.X_low_m.push_back(x);

    auto C = inst.clique();
    std::vector<char> low_nb(static_cast<size_t>(n), 0);
    for (vertex x : p.X_low)
        for (vertex w : g.neighbors(x))
            low_nb[w] = 1;
    for (vertex v : C) {
        bool free = std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](vertex w) { return in_x[w] != 0; });
        if (free)
            p.C_N.push_back(v);
        if (low_nb[v])
            p.D_low.push_back(v);
        bool in_all_high = std::all_of(p.X_high.begin(), p.X_high.end(), [&](vertex x) { return g.adjacent(x, v); });
        if (!p.X_high.empty() && in_all_high)
            p.D_h.push_back(v);
    }
    for (vertex v : p.D_h)
        if (!low_nb[v])
            p.C1.push_back(v);
    p.rr2_applicable = !p.X_high.empty() && static_cast<long long>(p.C1.size()) >= d + 1;
    if (p.rr2_applicable) {
        p.C2.assign(p.C1.begin(), p.C1.begin() + (d + 1));
        p.Cprime.assign(p.C1.begin() + (d + 1), p.C1.end());
    }
    return p;
}

dclique_instance apply_rr1(const dclique_instance& inst)
{
    auto p = partition_modulator(inst);
    if (p.X_mid.empty())
        return inst;
    int n = inst.g.num_vertices();
    dclique_instance out = drop_vertices(inst, membership(n, p.X_mid));
    // Old index of a kept vertex -> new index.
    auto gone = membership(n, p.X_mid);
    std::vector<vertex> idx(static_cast<size_t>(n), -1);
    for (vertex v = 0, j = 0; v < n; ++v)
        if (!gone[v])
            idx[v] = j++;
    for (vertex x : p.X_low_m) {
        vertex pend = out.g.add_vertex();
        out.g.add_edge(idx[x], pend);
        out.X.push_back(pend);
    }
    return out;
}

rr2_outcome apply_rr2(const dclique_instance& inst, const modulator_partition& part)
{
    if (!part.rr2_applicable || part.Cprime.empty())
        return {inst, false};
    dclique_instance out = drop_vertices(inst, membership(inst.g.num_vertices(), part.Cprime));
    out.k = inst.k - static_cast<int>(part.Cprime.size());
    return {std::move(out), true};
}

kernel_result kernelize(const dclique_instance& input)
{
    check_instance(input);
    kernel_result res{input, std::nullopt, {}};
    dclique_instance& cur = res.reduced;
    auto decide = [&](kernel_step why, bool v) {
        res.trace.push_back(why);
        res.verdict = v;
        return res;
    };
    for (;;) {
        long long d = cur.d();
        auto C = cur.clique();
        long long c = static_cast<long long>(C.size());
        if (cur.g.has_isolated_vertex())
            return decide(kernel_step::isolated_vertex, false);
        if (cur.k < c)
            return decide(kernel_step::budget_below_clique, false);
        if (c <= d * d + d + 1) {
            res.trace.push_back(kernel_step::small_clique);
            break;
        }
        auto p = partition_modulator(cur);
        if (static_cast<long long>(p.C_N.size()) >= d)
            return decide(kernel_step::many_free_clique, true);
        if (!p.X_mid.empty()) {
            cur = apply_rr1(cur);
            res.trace.push_back(kernel_step::rr1);
            continue;
        }
        auto r2 = apply_rr2(cur, p);
        if (!r2.applied)
            break;
        cur = std::move(r2.inst);
        res.trace.push_back(kernel_step::rr2);
    }
    // The bound only bites for d >= 2; tiny leftovers are settled exactly.
    if (cur.g.num_vertices() > kernel_bound(cur.d()))
        return decide(kernel_step::small_d_oracle, is_odd_k_colorable(cur.g, cur.k));
    return res;
}

} // namespace oddcolor
