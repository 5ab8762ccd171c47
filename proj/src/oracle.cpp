#include "oddcolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace oddcolor {

namespace {

// Backtracking over a fixed vertex order. Unused free colors are
// interchangeable, so a new free color is only ever the lowest unused one.
class search {
public:
    search(const graph& g, int k, const coloring& pre, extension_mode mode, bool need_odd_class)
        : g_(g), n_(g.num_vertices()), k_(k), mode_(mode), need_odd_class_(need_odd_class),
          f_(n_, k), cnt_(static_cast<size_t>(n_) * (k + 1), 0), odd_(static_cast<size_t>(n_), 0),
          uncolored_nbrs_(static_cast<size_t>(n_)), class_size_(static_cast<size_t>(k + 1), 0)
    {
        std::vector<char> in_pre(static_cast<size_t>(k + 1), 0);
        for (vertex v = 0; v < n_; ++v) {
            uncolored_nbrs_[v] = g_.degree(v);
            if (pre.size() == n_ && pre.assigned(v)) {
                if (pre[v] < 1 || pre[v] > k)
                    throw contract_violation("precoloring uses a color outside the palette");
                in_pre[pre[v]] = 1;
            }
        }
        for (color c = 1; c <= k; ++c)
            (in_pre[c] ? pre_colors_ : free_colors_).push_back(c);
        build_order(pre);
    }

    std::optional<coloring> run()
    {
        if (!consistent_)
            return std::nullopt;
        if (mode_ == extension_mode::odd)
            for (vertex v = 0; v < n_; ++v)
                if (g_.degree(v) == 0)
                    return std::nullopt;
        // Apply the precolored prefix.
        for (size_t i = 0; i < n_pre_; ++i) {
            vertex v = order_[i];
            color c = pre_color_[v];
            if (cnt(v, c) > 0)
                return std::nullopt;
            assign(v, c);
        }
        if (!prefix_ok())
            return std::nullopt;
        if (dfs(n_pre_))
            return f_;
        return std::nullopt;
    }

private:
    int& cnt(vertex v, color c) { return cnt_[static_cast<size_t>(v) * (k_ + 1) + c]; }

    void build_order(const coloring& pre)
    {
        pre_color_.assign(static_cast<size_t>(n_), 0);
        std::vector<char> placed(static_cast<size_t>(n_), 0);
        std::vector<int> colored_nbrs(static_cast<size_t>(n_), 0);
        auto place = [&](vertex v) {
            placed[v] = 1;
            order_.push_back(v);
            for (vertex w : g_.neighbors(v))
                ++colored_nbrs[w];
        };
        for (vertex v = 0; v < n_; ++v)
            if (pre.size() == n_ && pre.assigned(v)) {
                pre_color_[v] = pre[v];
                place(v);
            }
        n_pre_ = order_.size();
        while (static_cast<int>(order_.size()) < n_) {
            vertex best = -1;
            for (vertex v = 0; v < n_; ++v) {
                if (placed[v])
                    continue;
                if (best < 0 || colored_nbrs[v] > colored_nbrs[best] ||
                    (colored_nbrs[v] == colored_nbrs[best] && g_.degree(v) > g_.degree(best)))
                    best = v;
            }
            place(best);
        }
        // completes_[i]: vertices whose whole neighborhood is colored once
        // order_[0..i] is colored (and not before).
        completes_.assign(static_cast<size_t>(n_), {});
        std::vector<int> pos(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i)
            pos[order_[i]] = i;
        for (vertex w = 0; w < n_; ++w) {
            if (g_.degree(w) == 0)
                continue;
            int last = 0;
            for (vertex u : g_.neighbors(w))
                last = std::max(last, pos[u]);
            completes_[last].push_back(w);
        }
    }

    void assign(vertex v, color c)
    {
        f_[v] = c;
        ++class_size_[c];
        for (vertex w : g_.neighbors(v)) {
            int& m = cnt(w, c);
            ++m;
            odd_[w] += (m % 2) ? 1 : -1;
            --uncolored_nbrs_[w];
        }
    }

    void unassign(vertex v)
    {
        color c = f_[v];
        f_[v] = 0;
        --class_size_[c];
        for (vertex w : g_.neighbors(v)) {
            int& m = cnt(w, c);
            --m;
            odd_[w] += (m % 2) ? 1 : -1;
            ++uncolored_nbrs_[w];
        }
    }

    bool completed_ok(size_t i) const
    {
        if (mode_ != extension_mode::odd)
            return true;
        for (vertex w : completes_[i])
            if (odd_[w] == 0)
                return false;
        return true;
    }

    bool prefix_ok() const
    {
        for (size_t i = 0; i < n_pre_; ++i)
            if (!completed_ok(i))
                return false;
        return true;
    }

    bool leaf_ok() const
    {
        if (!need_odd_class_)
            return true;
        for (color c = 1; c <= k_; ++c)
            if (class_size_[c] % 2 == 1)
                return true;
        return false;
    }

    bool dfs(size_t i)
    {
        if (i == order_.size())
            return leaf_ok();
        vertex v = order_[i];
        auto try_color = [&](color c) {
            if (cnt(v, c) > 0)
                return false;
            assign(v, c);
            bool ok = completed_ok(i) && dfs(i + 1);
            if (!ok)
                unassign(v);
            return ok;
        };
        for (color c : pre_colors_)
            if (try_color(c))
                return true;
        for (size_t j = 0; j < free_colors_.size() && j <= free_used_; ++j) {
            bool fresh = (j == free_used_);
            if (fresh)
                ++free_used_;
            if (try_color(free_colors_[j]))
                return true;
            if (fresh)
                --free_used_;
        }
        return false;
    }

    const graph& g_;
    int n_;
    int k_;
    extension_mode mode_;
    bool need_odd_class_;
    bool consistent_ = true;
    coloring f_;
    std::vector<int> cnt_;
    std::vector<int> odd_;
    std::vector<int> uncolored_nbrs_;
    std::vector<int> class_size_;
    std::vector<color> pre_color_;
    std::vector<color> pre_colors_;
    std::vector<color> free_colors_;
    size_t free_used_ = 0;
    std::vector<vertex> order_;
    size_t n_pre_ = 0;
    std::vector<std::vector<vertex>> completes_;
};

void check_guard(const graph& g, const oracle_options& opt)
{
    if (g.num_vertices() > opt.guard_n)
        throw guard_exceeded("exact search refuses n=" + std::to_string(g.num_vertices()) +
                             " (guard " + std::to_string(opt.guard_n) + ")");
}

std::optional<coloring> decide(const graph& g, int k, extension_mode mode, bool strong)
{
    if (g.num_vertices() == 0)
        return strong ? std::nullopt : std::optional<coloring>(coloring(0, k));
    if (k <= 0)
        return std::nullopt;
    return search(g, k, coloring(), mode, strong).run();
}

oracle_result minimise(const graph& g, extension_mode mode, bool strong, int from, const oracle_options& opt)
{
    check_guard(g, opt);
    int n = g.num_vertices();
    if (mode == extension_mode::odd && g.has_isolated_vertex())
        return {chi_value::unbounded(), std::nullopt};
    if (n == 0 && !strong)
        return {0, coloring(0, 0)};
    // Every bounded variant is attained with at most n + 1 colors.
    for (int k = std::max(from, 1); k <= n + 1; ++k)
        if (auto f = decide(g, k, mode, strong)) {
            f->k = k;
            return {k, std::move(f)};
        }
    return {chi_value::unbounded(), std::nullopt};
}

} // namespace

oracle_result chi(const graph& g, const oracle_options& opt)
{
    return minimise(g, extension_mode::proper, false, 1, opt);
}

oracle_result chi_odd(const graph& g, const oracle_options& opt)
{
    return minimise(g, extension_mode::odd, false, 1, opt);
}

oracle_result chi_strong(const graph& g, const oracle_options& opt)
{
    auto base = chi(g, opt);
    int from = base.value.is_unbounded() ? 1 : base.value.value();
    if (base.witness && has_odd_class(*base.witness))
        return base;
    return minimise(g, extension_mode::proper, true, from, opt);
}

oracle_result chi_odd_strong(const graph& g, const oracle_options& opt)
{
    auto base = chi_odd(g, opt);
    if (base.value.is_unbounded())
        return base;
    if (base.witness && has_odd_class(*base.witness))
        return base;
    return minimise(g, extension_mode::odd, true, base.value.value(), opt);
}

std::optional<coloring> odd_colorable_with(const graph& g, int k, const coloring& pre, extension_mode mode,
                                           const oracle_options& opt)
{
    check_guard(g, opt);
    if (pre.size() != 0 && pre.size() != g.num_vertices())
        throw contract_violation("precoloring size does not match graph");
    if (g.num_vertices() == 0)
        return coloring(0, k);
    if (k <= 0)
        return std::nullopt;
    auto f = search(g, k, pre, mode, false).run();
    if (f)
        f->k = k;
    return f;
}

bool is_odd_k_colorable(const graph& g, int k, const oracle_options& opt)
{
    return odd_colorable_with(g, k, coloring(), extension_mode::odd, opt).has_value();
}

bool odd_repair(const graph& g, coloring& f, const std::vector<char>& movable, int steps, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (int step = 0; step < steps; ++step) {
        auto cert = verify_odd_coloring(g, f);
        if (cert.valid())
            return true;
        if (!cert.improper.empty())
            return false;
        vertex v = cert.no_odd_color[rng() % cert.no_odd_color.size()];
        std::vector<vertex> cand;
        for (vertex u : g.neighbors(v))
            if (movable[u])
                cand.push_back(u);
        if (cand.empty())
            return false;
        vertex u = cand[rng() % cand.size()];
        std::vector<color> options;
        for (color c = 1; c <= f.k; ++c) {
            bool clash = c == f[u];
            for (vertex w : g.neighbors(u))
                clash = clash || f[w] == c;
            if (!clash)
                options.push_back(c);
        }
        if (options.empty())
            continue;
        f[u] = options[rng() % options.size()];
    }
    return is_odd_coloring(g, f);
}

} // namespace oddcolor
