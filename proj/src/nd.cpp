#include "oddcolor/nd.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "oddcolor/oracle.hpp"

namespace oddcolor {

namespace {

bool same_type(const graph& g, vertex u, vertex v)
{
    for (vertex w = 0; w < g.num_vertices(); ++w)
        if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w))
            return false;
    return true;
}

struct candidate {
    std::vector<int> A;
    std::vector<parity> g;
};

// (A, g) pairs making the color odd on every type in `group`
std::vector<candidate> candidates_for(const nd_partition& part, const std::vector<int>& group)
{
    int t = part.size();
    std::vector<candidate> out;
    for (uint32_t mask = 1; mask < (1u << t); ++mask) {
        std::vector<int> A;
        for (int i = 0; i < t; ++i)
            if (mask >> i & 1)
                A.push_back(i);
        bool indep = true;
        for (size_t a = 0; a < A.size() && indep; ++a)
            for (size_t b = a + 1; b < A.size() && indep; ++b)
                indep = !part.adj[A[a]][A[b]];
        if (!indep)
            continue;
        for (uint32_t gm = 0; gm < (1u << A.size()); ++gm) {
            // bit set: even
            bool ok = true;
            std::vector<parity> gv;
            for (size_t a = 0; a < A.size() && ok; ++a) {
                bool even = gm >> a & 1;
                int cap = static_cast<int>(part.types[A[a]].size());
                if (even && (cap < 2 || part.kind[A[a]] == type_kind::clique))
                    ok = false;
                gv.push_back(even ? parity::even : parity::odd);
            }
            for (size_t j = 0; j < group.size() && ok; ++j) {
                int cnt = 0;
                for (size_t a = 0; a < A.size(); ++a)
                    cnt += part.adj[group[j]][A[a]] && gv[a] == parity::odd;
                ok = cnt % 2 == 1;
            }
            if (ok)
                out.push_back({A, gv});
        }
    }
    return out;
}

} // namespace

nd_partition compute_nd_partition(const graph& g)
{
    nd_partition part;
    for (vertex v = 0; v < g.num_vertices(); ++v) {
        bool placed = false;
        for (auto& ty : part.types)
            if (same_type(g, ty[0], v)) {
                ty.push_back(v);
                placed = true;
                break;
            }
        if (!placed)
            part.types.push_back({v});
    }
    int t = part.size();
    for (const auto& ty : part.types)
        part.kind.push_back(ty.size() >= 2 && g.adjacent(ty[0], ty[1]) ? type_kind::clique : type_kind::independent);
    part.adj.assign(static_cast<size_t>(t), std::vector<char>(static_cast<size_t>(t), 0));
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            if (a != b)
                part.adj[a][b] = g.adjacent(part.types[a][0], part.types[b][0]);
    return part;
}

std::vector<nd_guess> enumerate_nd_guesses(const nd_partition& part)
{
    std::vector<int> indep;
    for (int i = 0; i < part.size(); ++i)
        if (part.kind[i] == type_kind::independent)
            indep.push_back(i);
    std::vector<nd_guess> out;
    std::vector<int> block(indep.size(), 0);
    std::map<std::vector<int>, std::vector<candidate>> memo;
    auto expand = [&](int groups) {
        std::vector<std::vector<int>> T(static_cast<size_t>(groups));
        for (size_t j = 0; j < indep.size(); ++j)
            T[block[j]].push_back(indep[j]);
        std::vector<const std::vector<candidate>*> cands;
        for (const auto& grp : T) {
            auto it = memo.find(grp);
            if (it == memo.end())
                it = memo.emplace(grp, candidates_for(part, grp)).first;
            if (it->second.empty())
                return;
            cands.push_back(&it->second);
        }
        std::vector<size_t> pick(T.size(), 0);
        for (;;) {
            nd_guess gs;
            gs.T = T;
            for (size_t i = 0; i < T.size(); ++i) {
                gs.A.push_back((*cands[i])[pick[i]].A);
                gs.g.push_back((*cands[i])[pick[i]].g);
            }
            out.push_back(std::move(gs));
            size_t i = 0;
            while (i < pick.size() && ++pick[i] == cands[i]->size())
                pick[i++] = 0;
            if (i == pick.size())
                break;
        }
    };
    auto rec = [&](auto&& self, size_t j, int groups) -> void {
        if (j == indep.size()) {
            expand(groups);
            return;
        }
        for (int b = 0; b <= groups; ++b) {
            block[j] = b;
            self(self, j + 1, std::max(groups, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::optional<coloring> phase1_color(const graph& g, const nd_partition& part, const nd_guess& guess)
{
    coloring f(g.num_vertices(), guess.colors());
    std::vector<size_t> next(static_cast<size_t>(part.size()), 0);
    for (int i = 0; i < guess.colors(); ++i)
        for (size_t a = 0; a < guess.A[i].size(); ++a) {
            int ty = guess.A[i][a];
            size_t need = guess.g[i][a] == parity::odd ? 1 : 2;
            if (part.kind[ty] == type_kind::clique && need > 1)
                return std::nullopt;
            if (next[ty] + need > part.types[ty].size())
                return std::nullopt;
            for (size_t r = 0; r < need; ++r)
                f[part.types[ty][next[ty]++]] = i + 1;
        }
    return f;
}

phase2_result phase2_fill(const graph&, const nd_partition& part, const coloring& partial, const nd_guess&)
{
    phase2_result out{partial, std::vector<int>(static_cast<size_t>(part.size()), 0)};
    for (int ty = 0; ty < part.size(); ++ty) {
        const auto& vs = part.types[ty];
        std::vector<vertex> open;
        color low = 0;
        for (vertex v : vs) {
            if (partial[v] == 0)
                open.push_back(v);
            else if (low == 0 || partial[v] < low)
                low = partial[v];
        }
        if (part.kind[ty] == type_kind::independent && low != 0) {
            size_t fill = open.size() - open.size() % 2;
            for (size_t r = 0; r < fill; ++r)
                out.f[open[r]] = low;
            open.erase(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(fill));
        }
        out.deferred[ty] = static_cast<int>(open.size());
    }
    return out;
}

fpt_result solve_neighborhood_diversity(const graph& g, const fpt_options& opt)
{
    fpt_result res;
    if (g.has_isolated_vertex()) {
        res.value = chi_value::unbounded();
        return res;
    }
    auto part = compute_nd_partition(g);
    res.stats.t = part.size();
    if (part.size() > opt.max_t)
        throw guard_exceeded("neighborhood diversity " + std::to_string(part.size()) + " exceeds guard " +
                             std::to_string(opt.max_t));
    int n = g.num_vertices();
    int best = INT_MAX;
    std::map<std::vector<vertex>, oracle_result> residual_chi;
    for (const auto& gs : enumerate_nd_guesses(part)) {
        ++res.stats.guesses_tried;
        int m = gs.colors();
        if (m >= best)
            continue;
        auto p1 = phase1_color(g, part, gs);
        if (!p1)
            continue;
        auto p2 = phase2_fill(g, part, *p1, gs);
        std::vector<vertex> rest;
        for (vertex v = 0; v < n; ++v)
            if (p2.f[v] == 0)
                rest.push_back(v);
        auto it = residual_chi.find(rest);
        if (it == residual_chi.end())
            it = residual_chi.emplace(rest, chi(g.induced(rest), {std::max(24, n)})).first;
        int s = it->second.value.value();
        if (m + s >= best)
            continue;
        best = m + s;
        coloring f = p2.f;
        f.k = best;
        for (size_t r = 0; r < rest.size(); ++r)
            f[rest[r]] = m + (*it->second.witness)[static_cast<vertex>(r)];
        if (!is_odd_coloring(g, f))
            throw contract_violation("neighborhood diversity witness failed verification");
        res.witness = f;
        res.stats.t_prime = m;
        res.stats.residual_size = static_cast<int>(rest.size());
    }
    if (best == INT_MAX)
        throw contract_violation("no valid neighborhood-diversity guess on a graph without isolated vertices");
    res.value = best;
    return res;
}

} // namespace oddcolor
