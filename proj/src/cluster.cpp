#include "oddcolor/cluster.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "oddcolor/modulator.hpp"
#include "oddcolor/oracle.hpp"

namespace oddcolor {

namespace {

uint32_t type_of(const graph& g, const std::vector<int>& xpos, vertex v)
{
    uint32_t m = 0;
    for (vertex u : g.neighbors(v))
        if (xpos[u] >= 0)
            m |= 1u << xpos[u];
    return m;
}

std::vector<int> positions(const graph& g, const std::vector<vertex>& X)
{
    std::vector<int> xpos(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t j = 0; j < X.size(); ++j)
        xpos[X[j]] = static_cast<int>(j);
    return xpos;
}

struct cell {
    int type;
    std::vector<vertex> vs;
};

std::vector<cell> cells_of(const cluster_instance& inst, const std::vector<vertex>& clique,
                           const std::vector<uint32_t>& types)
{
    auto xpos = positions(inst.g, inst.X);
    std::vector<cell> cells;
    for (vertex v : clique) {
        uint32_t y = type_of(inst.g, xpos, v);
        int ti = static_cast<int>(std::find(types.begin(), types.end(), y) - types.begin());
        auto it = std::find_if(cells.begin(), cells.end(), [&](const cell& c) { return c.type == ti; });
        if (it == cells.end())
            cells.push_back({ti, {v}});
        else
            it->vs.push_back(v);
    }
    std::sort(cells.begin(), cells.end(), [](const cell& a, const cell& b) { return a.type < b.type; });
    return cells;
}

// colors of c over the X positions in y, as a bitmask, and per-color counts
uint32_t colors_of(const modulator_guess& gs, uint32_t y)
{
    uint32_t m = 0;
    for (size_t j = 0; j < gs.c.size(); ++j)
        if (y >> j & 1)
            m |= 1u << (gs.c[j] - 1);
    return m;
}

std::optional<int> check_cells(const std::vector<cell>& cells, const std::vector<uint32_t>& types,
                               const modulator_guess& gs, const std::vector<uint32_t>& S)
{
    int tp = gs.t_prime;
    uint32_t all = 0;
    int nnew = 0;
    for (size_t a = 0; a < cells.size(); ++a) {
        if (S[a] >> tp)
            return std::nullopt;
        if (S[a] & all)
            return std::nullopt;
        if (S[a] & colors_of(gs, types[cells[a].type]))
            return std::nullopt;
        int used = std::popcount(S[a]);
        if (used > static_cast<int>(cells[a].vs.size()))
            return std::nullopt;
        all |= S[a];
        nnew += static_cast<int>(cells[a].vs.size()) - used;
    }
    for (size_t a = 0; a < cells.size(); ++a) {
        uint32_t y = types[cells[a].type];
        // odd[i]: color i+1 seen an odd number of times when every clique
        // color is counted once
        uint32_t odd = all;
        for (size_t j = 0; j < gs.c.size(); ++j)
            if (y >> j & 1)
                odd ^= 1u << (gs.c[j] - 1);
        for (int i = 0; i < tp; ++i)
            if (S[a] >> i & 1)
                if (nnew == 0 && (odd & ~(1u << i)) == 0)
                    return std::nullopt;
        bool has_new = static_cast<int>(cells[a].vs.size()) > std::popcount(S[a]);
        if (has_new && nnew < 2 && odd == 0)
            return std::nullopt;
    }
    return nnew;
}

struct option {
    std::vector<uint32_t> S;  // per cell
    int a;
};

std::vector<option> clique_options(const std::vector<cell>& cells, const std::vector<uint32_t>& types,
                                   const modulator_guess& gs)
{
    std::vector<option> out;
    std::vector<uint32_t> S(cells.size(), 0);
    uint32_t full = (1u << gs.t_prime) - 1;
    auto rec = [&](auto&& self, size_t a, uint32_t used) -> void {
        if (a == cells.size()) {
            if (auto n = check_cells(cells, types, gs, S))
                out.push_back({S, *n});
            return;
        }
        uint32_t avail = full & ~used & ~colors_of(gs, types[cells[a].type]);
        int cap = static_cast<int>(cells[a].vs.size());
        for (uint32_t s = avail;; s = (s - 1) & avail) {
            if (std::popcount(s) <= cap) {
                S[a] = s;
                self(self, a + 1, used | s);
            }
            if (s == 0)
                break;
        }
        S[a] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

struct node {
    std::vector<uint8_t> key;
    int val;
    int parent;
    int choice;
};

} // namespace

tri accumulate(tri prev, bool used)
{
    if (!used)
        return prev;
    return prev == tri::odd ? tri::even : tri::odd;
}

std::vector<tri> backward(tri cur, bool used)
{
    switch (cur) {
    case tri::zero:
        return used ? std::vector<tri>{} : std::vector<tri>{tri::zero};
    case tri::even:
        return {used ? tri::odd : tri::even};
    case tri::odd:
        if (used)
            return {tri::even, tri::zero};
        return {tri::odd};
    }
    return {};
}

cluster_instance make_cluster_instance(const graph& g, std::vector<vertex> X, int k)
{
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    auto rest = complement_set(g.num_vertices(), X);
    graph h = g.induced(rest);
    if (!is_cluster_graph(h))
        throw contract_violation("g - X is not a disjoint union of cliques");
    cluster_instance inst{g, X, k, {}};
    for (auto comp : h.components()) {
        for (auto& v : comp)
            v = rest[v];
        std::sort(comp.begin(), comp.end());
        inst.cliques.push_back(comp);
    }
    std::sort(inst.cliques.begin(), inst.cliques.end());
    return inst;
}

std::vector<uint32_t> realized_types(const cluster_instance& inst)
{
    auto xpos = positions(inst.g, inst.X);
    std::vector<uint32_t> types;
    for (const auto& cl : inst.cliques)
        for (vertex v : cl)
            types.push_back(type_of(inst.g, xpos, v));
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    return types;
}

std::optional<int> clique_local_min_new(const cluster_instance& inst, const std::vector<vertex>& clique,
                                        const modulator_guess& guess, const std::vector<uint32_t>& types,
                                        const std::vector<uint32_t>& h)
{
    auto cells = cells_of(inst, clique, types);
    std::vector<uint32_t> S;
    std::vector<char> present(types.size(), 0);
    for (const auto& c : cells) {
        S.push_back(h[c.type]);
        present[c.type] = 1;
    }
    for (size_t y = 0; y < types.size(); ++y)
        if (!present[y] && h[y] != 0)
            return std::nullopt;
    return check_cells(cells, types, guess, S);
}

fpt_result solve_distance_to_cluster(const cluster_instance& inst, const fpt_options& opt)
{
    fpt_result res;
    res.stats.t = inst.t();
    const graph& g = inst.g;
    if (g.has_isolated_vertex()) {
        res.value = chi_value::unbounded();
        return res;
    }
    if (inst.t() > opt.max_t)
        throw guard_exceeded("cluster modulator of size " + std::to_string(inst.t()) + " exceeds guard " +
                             std::to_string(opt.max_t));
    auto types = realized_types(inst);
    std::vector<std::vector<cell>> cells;
    for (const auto& cl : inst.cliques)
        cells.push_back(cells_of(inst, cl, types));
    int best = INT_MAX;
    auto guesses = enumerate_guesses(g, inst.X);
    for (const auto& gs : guesses) {
        ++res.stats.guesses_tried;
        int tp = gs.t_prime;
        if (tp >= best)
            continue;
        size_t width = types.size() * static_cast<size_t>(tp);
        std::vector<std::vector<node>> layers;
        std::vector<std::vector<option>> opts;
        layers.push_back({node{std::vector<uint8_t>(width, 0), 0, -1, -1}});
        bool dead = false;
        for (size_t q = 0; q < inst.cliques.size() && !dead; ++q) {
            opts.push_back(clique_options(cells[q], types, gs));
            std::map<std::vector<uint8_t>, int> index;
            std::vector<node> next;
            const auto& prev = layers.back();
            for (size_t pi = 0; pi < prev.size(); ++pi)
                for (size_t oi = 0; oi < opts[q].size(); ++oi) {
                    const option& o = opts[q][oi];
                    int val = std::max(prev[pi].val, o.a);
                    if (tp + val >= best)
                        continue;
                    std::vector<uint8_t> key = prev[pi].key;
                    for (size_t a = 0; a < cells[q].size(); ++a)
                        for (int i = 0; i < tp; ++i) {
                            auto& slot = key[static_cast<size_t>(cells[q][a].type) * tp + i];
                            slot = static_cast<uint8_t>(accumulate(tri(slot), o.S[a] >> i & 1));
                        }
                    auto [it, fresh] = index.emplace(key, static_cast<int>(next.size()));
                    if (fresh)
                        next.push_back({std::move(key), val, static_cast<int>(pi), static_cast<int>(oi)});
                    else if (val < next[it->second].val)
                        next[it->second] = {next[it->second].key, val, static_cast<int>(pi), static_cast<int>(oi)};
                }
            res.stats.dp_states += static_cast<long long>(next.size());
            if (static_cast<long long>(next.size()) > opt.max_states)
                throw guard_exceeded("cluster DP layer exceeds " + std::to_string(opt.max_states) + " states");
            dead = next.empty();
            layers.push_back(std::move(next));
        }
        if (dead)
            continue;
        // each X vertex needs its designated color an odd number of times
        int chosen = -1;
        const auto& last = layers.back();
        for (size_t ni = 0; ni < last.size(); ++ni) {
            bool ok = true;
            for (int j = 0; j < inst.t() && ok; ++j) {
                color want = gs.odd[j];
                int cnt = 0;
                for (vertex u : g.neighbors(inst.X[j])) {
                    auto it = std::find(inst.X.begin(), inst.X.end(), u);
                    if (it != inst.X.end() && gs.c[it - inst.X.begin()] == want)
                        ++cnt;
                }
                for (size_t y = 0; y < types.size(); ++y)
                    if ((types[y] >> j & 1) && tri(last[ni].key[y * tp + (want - 1)]) == tri::odd)
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
        coloring f(g.num_vertices(), best);
        for (int j = 0; j < inst.t(); ++j)
            f[inst.X[j]] = gs.c[j];
        int ni = chosen;
        for (size_t q = inst.cliques.size(); q-- > 0;) {
            const node& nd = layers[q + 1][ni];
            const option& o = opts[q][nd.choice];
            color fresh = tp;
            for (size_t a = 0; a < cells[q].size(); ++a) {
                const auto& vs = cells[q][a].vs;
                size_t idx = 0;
                for (int i = 0; i < tp; ++i)
                    if (o.S[a] >> i & 1)
                        f[vs[idx++]] = i + 1;
                for (; idx < vs.size(); ++idx)
                    f[vs[idx]] = ++fresh;
            }
            ni = nd.parent;
        }
        if (!is_odd_coloring(g, f))
            throw contract_violation("cluster DP witness failed verification");
        res.witness = f.compacted();
    }
    if (best == INT_MAX)
        throw contract_violation("cluster DP found no odd coloring of a graph without isolated vertices");
    res.value = best;
    return res;
}

} // namespace oddcolor
