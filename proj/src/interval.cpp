#include "oddcolor/interval.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "oddcolor/io.hpp"

namespace oddcolor {

namespace {

double parse_number(const std::string& tok, int line)
{
    auto slash = tok.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            double v = std::stod(tok, &used);
            if (used != tok.size())
                throw parse_error(line, "bad number '" + tok + "'");
            return v;
        }
        std::string a = tok.substr(0, slash), b = tok.substr(slash + 1);
        size_t ua = 0, ub = 0;
        double p = std::stod(a, &ua), q = std::stod(b, &ub);
        if (ua != a.size() || ub != b.size() || q == 0)
            throw parse_error(line, "bad rational '" + tok + "'");
        return p / q;
    } catch (const std::logic_error&) {
        throw parse_error(line, "bad number '" + tok + "'");
    }
}

struct endpoint {
    double x;
    int side;  // 0 left, 1 right
    vertex v;
};

std::vector<endpoint> sorted_endpoints(const interval_rep& rep)
{
    std::vector<endpoint> ev;
    for (vertex v = 0; v < rep.size(); ++v) {
        ev.push_back({rep.iv[v].l, 0, v});
        ev.push_back({rep.iv[v].r, 1, v});
    }
    std::sort(ev.begin(), ev.end(), [](const endpoint& a, const endpoint& b) {
        if (a.x != b.x)
            return a.x < b.x;
        if (a.side != b.side)
            return a.side < b.side;
        return a.v < b.v;
    });
    return ev;
}

bool meets(const interval& a, const interval& b) { return a.l <= b.r && b.l <= a.r; }

} // namespace

interval_rep parse_intervals(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<std::optional<interval>> got;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::istringstream ls(line);
        std::string id_tok, l_tok, r_tok, extra;
        if (!(ls >> id_tok) || id_tok[0] == '#')
            continue;
        if (!(ls >> l_tok >> r_tok) || (ls >> extra))
            throw parse_error(no, "expected 'id l r'");
        int id = 0;
        auto [p, ec] = std::from_chars(id_tok.data(), id_tok.data() + id_tok.size(), id);
        if (ec != std::errc() || p != id_tok.data() + id_tok.size() || id < 0)
            throw parse_error(no, "bad vertex id '" + id_tok + "'");
        interval iv{parse_number(l_tok, no), parse_number(r_tok, no)};
        if (iv.l > iv.r)
            throw parse_error(no, "left endpoint exceeds right endpoint");
        if (id >= static_cast<int>(got.size()))
            got.resize(static_cast<size_t>(id) + 1);
        if (got[id])
            throw parse_error(no, "vertex " + id_tok + " given twice");
        got[id] = iv;
    }
    interval_rep rep;
    for (size_t v = 0; v < got.size(); ++v) {
        if (!got[v])
            throw parse_error(no, "vertex " + std::to_string(v) + " missing");
        rep.iv.push_back(*got[v]);
    }
    return rep;
}

graph interval_graph(const interval_rep& rep)
{
    graph g(rep.size());
    for (vertex u = 0; u < rep.size(); ++u)
        for (vertex v = u + 1; v < rep.size(); ++v)
            if (meets(rep.iv[u], rep.iv[v]))
                g.add_edge(u, v);
    return g;
}

interval_rep distinguish(const interval_rep& rep)
{
    interval_rep out;
    out.iv.resize(rep.iv.size());
    auto ev = sorted_endpoints(rep);
    for (size_t i = 0; i < ev.size(); ++i)
        (ev[i].side == 0 ? out.iv[ev[i].v].l : out.iv[ev[i].v].r) = static_cast<double>(i);
    return out;
}

bool is_distinguishing(const interval_rep& rep)
{
    auto ev = sorted_endpoints(rep);
    for (size_t i = 1; i < ev.size(); ++i)
        if (ev[i].x == ev[i - 1].x)
            return false;
    return true;
}

int omega(const interval_rep& rep)
{
    int cur = 0, best = 0;
    for (const auto& e : sorted_endpoints(rep)) {
        cur += e.side == 0 ? 1 : -1;
        best = std::max(best, cur);
    }
    return best;
}

std::vector<std::vector<vertex>> build_backbone_paths(const interval_rep& rep)
{
    graph g = interval_graph(rep);
    auto comps = g.components();
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
        auto lo = [&](const std::vector<vertex>& c) {
            double m = rep.iv[c[0]].l;
            for (vertex v : c)
                m = std::min(m, rep.iv[v].l);
            return m;
        };
        return lo(a) < lo(b);
    });
    std::vector<std::vector<vertex>> paths;
    for (const auto& comp : comps) {
        vertex cur = comp[0];
        for (vertex v : comp)
            if (rep.iv[v].r < rep.iv[cur].r)
                cur = v;
        std::vector<vertex> path{cur};
        for (;;) {
            vertex next = cur;
            for (vertex u : g.neighbors(cur))
                if (rep.iv[u].r > rep.iv[next].r)
                    next = u;
            if (next == cur)
                break;
            path.push_back(next);
            cur = next;
        }
        // Every interval of the component meets the path.
        std::vector<char> near(static_cast<size_t>(g.num_vertices()), 0);
        for (vertex p : path) {
            near[p] = 1;
            for (vertex u : g.neighbors(p))
                near[u] = 1;
        }
        for (vertex v : comp)
            if (!near[v])
                throw contract_violation("backbone path does not dominate its component");
        paths.push_back(std::move(path));
    }
    return paths;
}

interval_coloring color_interval_graph(const interval_rep& input)
{
    interval_rep rep = distinguish(input);
    graph g = interval_graph(rep);
    interval_coloring out;
    out.omega = omega(rep);
    if (g.has_isolated_vertex())
        return out;
    int k = out.omega;
    int n = g.num_vertices();
    coloring f(n, k + 1);
    std::vector<int> pos(static_cast<size_t>(n), -1);
    std::vector<vertex> path_of_pos;
    auto paths = build_backbone_paths(rep);
    std::vector<int> path_id(static_cast<size_t>(n), -1);
    for (size_t pi = 0; pi < paths.size(); ++pi)
        for (size_t i = 0; i < paths[pi].size(); ++i) {
            vertex v = paths[pi][i];
            f[v] = static_cast<color>(i % 3) + 1;
            pos[v] = static_cast<int>(i);
            path_id[v] = static_cast<int>(pi);
        }
    coloring phase1 = f;

    std::vector<vertex> rest;
    for (vertex v = 0; v < n; ++v)
        if (pos[v] < 0)
            rest.push_back(v);
    std::sort(rest.begin(), rest.end(), [&](vertex a, vertex b) { return rep.iv[a].l < rep.iv[b].l; });
    bool ok = true;
    for (vertex u : rest) {
        std::vector<vertex> on_path;
        for (vertex w : g.neighbors(u))
            if (pos[w] >= 0)
                on_path.push_back(w);
        std::sort(on_path.begin(), on_path.end(), [&](vertex a, vertex b) { return pos[a] < pos[b]; });
        std::vector<color> list;
        for (color c = 4; c <= k + 1; ++c)
            list.push_back(c);
        if (on_path.size() <= 2 && !on_path.empty()) {
            int q = pos[on_path.front()];
            if (q >= 1)
                list.push_back(f[paths[path_id[on_path.front()]][q - 1]]);
        }
        std::vector<char> used(static_cast<size_t>(k + 2), 0);
        for (vertex w : g.neighbors(u))
            if (f[w] != 0)
                used[f[w]] = 1;
        color pick = 0;
        for (color c : list)
            if (!used[c] && (pick == 0 || c < pick))
                pick = c;
        if (pick == 0) {
            // list exhausted; any proper color keeps the repair stage going
            ok = false;
            for (color c = 1; c <= k + 1 && pick == 0; ++c)
                if (!used[c])
                    pick = c;
        }
        f[u] = pick;
        if (pick == 0) {
            auto proper = odd_colorable_with(g, k + 1, phase1, extension_mode::proper, {std::max(24, n)});
            if (!proper)
                throw contract_violation("backbone coloring has no proper extension within omega+1");
            f = *proper;
            break;
        }
    }
    if (ok && is_odd_coloring(g, f)) {
        out.f = f;
        return out;
    }
    out.fallback = true;
    std::vector<char> movable(static_cast<size_t>(n), 0);
    for (vertex u : rest)
        movable[u] = 1;
    if (odd_repair(g, f, movable, 40 * n + 400)) {
        out.fallback_by = "repair";
        out.f = f;
        return out;
    }
    out.fallback_by = "extension";
    oracle_options opt{std::max(24, n)};
    auto ext = odd_colorable_with(g, k + 1, phase1, extension_mode::odd, opt);
    if (!ext)
        throw contract_violation("interval backbone coloring does not extend within omega+1 colors");
    out.f = *ext;
    return out;
}

bool is_proper_interval(const interval_rep& input)
{
    interval_rep rep = distinguish(input);
    for (vertex u = 0; u < rep.size(); ++u)
        for (vertex v = 0; v < rep.size(); ++v)
            if (u != v && rep.iv[u].l < rep.iv[v].l && rep.iv[v].r < rep.iv[u].r)
                return false;
    return true;
}

std::optional<vertex> has_two_max_disjoint_cliques_vertex(const interval_rep& input)
{
    if (!is_proper_interval(input))
        throw contract_violation("some interval contains another");
    interval_rep rep = distinguish(input);
    int k = omega(rep);
    for (vertex v = 0; v < rep.size(); ++v) {
        int left = 0, right = 0;
        const interval& a = rep.iv[v];
        for (vertex u = 0; u < rep.size(); ++u) {
            const interval& b = rep.iv[u];
            left += (b.l < a.l && a.l < b.r && b.r < a.r);
            right += (a.l < b.l && b.l < a.r && a.r < b.r);
        }
        if (left == k - 1 && right == k - 1 && k >= 2)
            return v;
    }
    return std::nullopt;
}

oracle_result chi_odd_proper_interval(const interval_rep& input)
{
    auto hit = has_two_max_disjoint_cliques_vertex(input);
    interval_rep rep = distinguish(input);
    graph g = interval_graph(rep);
    if (g.has_isolated_vertex())
        return {chi_value::unbounded(), std::nullopt};
    int k = omega(rep);
    if (hit) {
        auto c = color_interval_graph(rep);
        return {k + 1, c.f};
    }
    std::vector<vertex> order(static_cast<size_t>(rep.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](vertex a, vertex b) { return rep.iv[a].r < rep.iv[b].r; });
    coloring f(rep.size(), k);
    for (size_t i = 0; i < order.size(); ++i)
        f[order[i]] = static_cast<color>(i % static_cast<size_t>(k)) + 1;
    if (!is_odd_coloring(g, f))
        throw contract_violation("cyclic coloring of a proper interval graph failed verification");
    return {k, f};
}

} // namespace oddcolor
