#include "oddcolor/cocluster.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <unordered_map>

#include "oddcolor/modulator.hpp"
#include "oddcolor/oracle.hpp"

namespace oddcolor {

namespace {

enum : uint8_t { pat_zero = 0, pat_odd = 1, pat_even = 2 };

struct part_cell {
    int type;  // index into the realized types
    std::vector<vertex> vs;
};

struct part_option {
    uint32_t colors = 0;             // bit d-1: color d placed here
    uint32_t odd_class = 0;          // bit d-1: class of d has odd size
    uint32_t xbits = 0;              // parity of odd(x) among x's neighbors here
    std::vector<uint8_t> pat;        // [d-1][cell]
    int new_classes = 0;
    bool odd_new = false;            // some new class here has odd size
    bool absorb = false;             // every vertex takes a placed color
};

struct node {
    uint64_t key;
    int val;
    int parent;
    int choice;
};

struct state {
    uint32_t placed = 0, parity = 0, xbits = 0, pending = 0;
    bool any_new = false;

    uint64_t pack() const
    {
        return uint64_t(placed) | uint64_t(parity) << 10 | uint64_t(xbits) << 20 | uint64_t(any_new) << 25 |
               uint64_t(pending) << 26;
    }
    static state unpack(uint64_t k)
    {
        state s;
        s.placed = k & 1023;
        s.parity = (k >> 10) & 1023;
        s.xbits = (k >> 20) & 31;
        s.any_new = (k >> 25) & 1;
        s.pending = static_cast<uint32_t>(k >> 26);
        return s;
    }
};

std::vector<part_option> options_for(const std::vector<part_cell>& cells, const std::vector<uint32_t>& types,
                                     const modulator_guess& gs)
{
    int tp = gs.t_prime, nc = static_cast<int>(cells.size()), t = static_cast<int>(gs.c.size());
    std::vector<uint32_t> clash(cells.size(), 0);
    for (int a = 0; a < nc; ++a)
        for (int j = 0; j < t; ++j)
            if (types[cells[a].type] >> j & 1)
                clash[a] |= 1u << (gs.c[j] - 1);
    std::vector<part_option> out;
    std::vector<uint8_t> pat(static_cast<size_t>(tp * nc), pat_zero);
    std::vector<int> used(cells.size(), 0);
    auto emit = [&](uint32_t colors) {
        part_option base;
        base.colors = colors;
        base.pat = pat;
        for (int d = 0; d < tp; ++d) {
            int par = 0;
            for (int a = 0; a < nc; ++a)
                par ^= pat[d * nc + a] == pat_odd;
            if (par)
                base.odd_class |= 1u << d;
        }
        for (int j = 0; j < t; ++j) {
            int d = gs.odd[j] - 1;
            int par = 0;
            for (int a = 0; a < nc; ++a)
                if (types[cells[a].type] >> j & 1)
                    par ^= pat[d * nc + a] == pat_odd;
            if (par)
                base.xbits |= 1u << j;
        }
        int rest = 0;
        bool zero_ok = true;
        for (int a = 0; a < nc; ++a) {
            int left = static_cast<int>(cells[a].vs.size()) - used[a];
            rest += left;
            bool fillable = false;
            for (int d = 0; d < tp; ++d)
                fillable = fillable || pat[d * nc + a] != pat_zero;
            if (left % 2 != 0 || (left > 0 && !fillable))
                zero_ok = false;
        }
        if (zero_ok) {
            part_option o = base;
            o.absorb = true;
            out.push_back(o);
        } else {
            part_option o = base;
            o.new_classes = 1;
            o.odd_new = rest % 2 == 1;
            out.push_back(o);
        }
        if (rest >= 2 && rest % 2 == 0) {
            part_option o = base;
            o.new_classes = 2;
            o.odd_new = true;
            out.push_back(o);
        }
    };
    auto rec_cell = [&](auto&& self_color, auto&& self, int d, int a, uint32_t colors, bool any) -> void {
        if (a == nc) {
            if (any)
                self_color(self_color, self, d + 1, colors | 1u << d);
            return;
        }
        self(self_color, self, d, a + 1, colors, any);
        if (clash[a] >> d & 1)
            return;
        int cap = static_cast<int>(cells[a].vs.size()) - used[a];
        for (uint8_t p : {pat_odd, pat_even}) {
            int need = p == pat_odd ? 1 : 2;
            if (need > cap)
                continue;
            pat[d * nc + a] = p;
            used[a] += need;
            self(self_color, self, d, a + 1, colors, true);
            used[a] -= need;
            pat[d * nc + a] = pat_zero;
        }
    };
    auto rec_color = [&](auto&& self, auto&& cell_fn, int d, uint32_t colors) -> void {
        if (d == tp) {
            emit(colors);
            return;
        }
        self(self, cell_fn, d + 1, colors);
        cell_fn(self, cell_fn, d, 0, colors, false);
    };
    rec_color(rec_color, rec_cell, 0, 0);
    return out;
}

} // namespace

cocluster_instance make_cocluster_instance(const graph& g, std::vector<vertex> X, int k)
{
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    auto rest = complement_set(g.num_vertices(), X);
    graph h = g.induced(rest).complement();
    if (!is_cluster_graph(h))
        throw contract_violation("g - X is not complete multipartite");
    cocluster_instance inst{g, X, k, {}};
    for (auto comp : h.components()) {
        for (auto& v : comp)
            v = rest[v];
        std::sort(comp.begin(), comp.end());
        inst.parts.push_back(comp);
    }
    std::sort(inst.parts.begin(), inst.parts.end());
    return inst;
}

fpt_result solve_distance_to_cocluster(const cocluster_instance& inst, const fpt_options& opt)
{
    fpt_result res;
    const graph& g = inst.g;
    int t = inst.t();
    res.stats.t = t;
    if (g.has_isolated_vertex()) {
        res.value = chi_value::unbounded();
        return res;
    }
    if (t > opt.max_t || t > 5)
        throw guard_exceeded("co-cluster modulator of size " + std::to_string(t) + " exceeds guard");

    std::vector<int> xpos(static_cast<size_t>(g.num_vertices()), -1);
    for (int j = 0; j < t; ++j)
        xpos[inst.X[j]] = j;
    auto type_of = [&](vertex v) {
        uint32_t m = 0;
        for (vertex u : g.neighbors(v))
            if (xpos[u] >= 0)
                m |= 1u << xpos[u];
        return m;
    };
    std::vector<uint32_t> types;
    for (const auto& p : inst.parts)
        for (vertex v : p)
            types.push_back(type_of(v));
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    std::vector<std::vector<part_cell>> cells(inst.parts.size());
    for (size_t i = 0; i < inst.parts.size(); ++i)
        for (vertex v : inst.parts[i]) {
            int ti = static_cast<int>(std::lower_bound(types.begin(), types.end(), type_of(v)) - types.begin());
            auto it = std::find_if(cells[i].begin(), cells[i].end(), [&](const part_cell& c) { return c.type == ti; });
            if (it == cells[i].end())
                cells[i].push_back({ti, {v}});
            else
                it->vs.push_back(v);
        }

    int best = INT_MAX;
    for (const auto& gs : enumerate_guesses(g, inst.X)) {
        ++res.stats.guesses_tried;
        int tp = gs.t_prime;
        if (tp >= best)
            continue;
        uint32_t full = (1u << tp) - 1;
        // odd_x[tau]: colors seen an odd number of times on X by a vertex of type tau
        std::vector<uint32_t> odd_x(types.size(), 0);
        for (size_t y = 0; y < types.size(); ++y)
            for (int j = 0; j < t; ++j)
                if (types[y] >> j & 1)
                    odd_x[y] ^= 1u << (gs.c[j] - 1);
        std::vector<std::vector<part_option>> opts;
        for (const auto& pc : cells)
            opts.push_back(options_for(pc, types, gs));

        std::vector<std::vector<node>> layers{{node{state{}.pack(), 0, -1, -1}}};
        for (size_t i = 0; i < inst.parts.size() && !layers.back().empty(); ++i) {
            std::unordered_map<uint64_t, int> index;
            std::vector<node> next;
            const auto& prev = layers.back();
            for (size_t pi = 0; pi < prev.size(); ++pi) {
                state s = state::unpack(prev[pi].key);
                for (size_t oi = 0; oi < opts[i].size(); ++oi) {
                    const part_option& o = opts[i][oi];
                    if (o.colors & s.placed)
                        continue;
                    int val = prev[pi].val + o.new_classes;
                    if (tp + val >= best)
                        continue;
                    state n = s;
                    for (uint32_t p = s.pending; p; p &= p - 1) {
                        int y = std::countr_zero(p);
                        if (o.odd_new || ((o.odd_class ^ odd_x[y]) & o.colors))
                            n.pending &= ~(1u << y);
                    }
                    for (const auto& c : cells[i]) {
                        int y = c.type;
                        bool sat = s.any_new || ((s.parity ^ odd_x[y]) & s.placed) || (odd_x[y] & o.colors);
                        if (!sat)
                            n.pending |= 1u << y;
                    }
                    n.placed |= o.colors;
                    n.parity |= o.odd_class;
                    n.xbits ^= o.xbits;
                    n.any_new = n.any_new || o.odd_new;
                    auto [it, fresh] = index.emplace(n.pack(), static_cast<int>(next.size()));
                    if (fresh)
                        next.push_back({n.pack(), val, static_cast<int>(pi), static_cast<int>(oi)});
                    else if (val < next[it->second].val)
                        next[it->second] = {n.pack(), val, static_cast<int>(pi), static_cast<int>(oi)};
                }
            }
            res.stats.dp_states += static_cast<long long>(next.size());
            if (static_cast<long long>(next.size()) > opt.max_states)
                throw guard_exceeded("co-cluster DP layer exceeds " + std::to_string(opt.max_states) + " states");
            layers.push_back(std::move(next));
        }
        int chosen = -1;
        const auto& last = layers.back();
        for (size_t ni = 0; ni < last.size(); ++ni) {
            state s = state::unpack(last[ni].key);
            bool ok = true;
            for (uint32_t p = s.pending; p && ok; p &= p - 1)
                ok = (odd_x[std::countr_zero(p)] & ~s.placed & full) != 0;
            for (int j = 0; j < t && ok; ++j) {
                int cnt = s.xbits >> j & 1;
                for (vertex u : g.neighbors(inst.X[j]))
                    if (xpos[u] >= 0 && gs.c[xpos[u]] == gs.odd[j])
                        ++cnt;
                ok = cnt % 2 == 1;
            }
            if (ok && (chosen < 0 || last[ni].val < last[chosen].val))
                chosen = static_cast<int>(ni);
        }
        if (chosen < 0 || tp + last[chosen].val >= best)
            continue;
        best = tp + last[chosen].val;
        res.stats.t_prime = tp;
        res.stats.extra_colors = 0;

        coloring f(g.num_vertices(), best);
        for (int j = 0; j < t; ++j)
            f[inst.X[j]] = gs.c[j];
        color fresh = tp;
        int ni = chosen;
        for (size_t i = inst.parts.size(); i-- > 0;) {
            const node& nd = layers[i + 1][ni];
            const part_option& o = opts[i][nd.choice];
            int nc = static_cast<int>(cells[i].size());
            std::vector<vertex> rest;
            for (int a = 0; a < nc; ++a) {
                const auto& vs = cells[i][a].vs;
                size_t at = 0;
                int first = -1;
                for (int d = 0; d < tp; ++d) {
                    uint8_t p = o.pat[d * nc + a];
                    if (p == pat_zero)
                        continue;
                    if (first < 0)
                        first = d;
                    for (int r = 0; r < (p == pat_odd ? 1 : 2); ++r)
                        f[vs[at++]] = d + 1;
                }
                for (; at < vs.size(); ++at) {
                    if (o.absorb)
                        f[vs[at]] = first + 1;
                    else
                        rest.push_back(vs[at]);
                }
            }
            if (o.new_classes == 1) {
                ++fresh;
                for (vertex v : rest)
                    f[v] = fresh;
            } else if (o.new_classes == 2) {
                ++res.stats.extra_colors;
                f[rest[0]] = ++fresh;
                ++fresh;
                for (size_t r = 1; r < rest.size(); ++r)
                    f[rest[r]] = fresh;
            }
            ni = nd.parent;
        }
        if (!is_odd_coloring(g, f))
            throw contract_violation("co-cluster witness failed verification");
        res.witness = f.compacted();
    }
    if (best == INT_MAX)
        throw contract_violation("co-cluster DP found no odd coloring of a graph without isolated vertices");
    res.value = best;
    return res;
}

} // namespace oddcolor
