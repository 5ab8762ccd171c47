#pragma once

// Test-only exhaustive enumerators, independent of the library search code.

#include <optional>

#include "oddcolor/graph.hpp"

namespace oddcolor::test {

enum class want { proper, odd };

// Tries every map V -> [k]; O(k^n), so keep n * log(k) small.
inline bool exists_coloring(const graph& g, int k, want w, bool strong)
{
    int n = g.num_vertices();
    std::vector<int> c(static_cast<size_t>(n), 1);
    if (n == 0)
        return !strong;
    for (;;) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (c[u] == c[v]) {
                ok = false;
                break;
            }
        if (ok && w == want::odd)
            for (vertex v = 0; v < n && ok; ++v) {
                std::vector<int> cnt(static_cast<size_t>(k + 1), 0);
                for (vertex u : g.neighbors(v))
                    ++cnt[c[u]];
                bool any = false;
                for (int x = 1; x <= k; ++x)
                    any = any || (cnt[x] % 2 == 1);
                ok = any;
            }
        if (ok && strong) {
            std::vector<int> cls(static_cast<size_t>(k + 1), 0);
            for (int x : c)
                ++cls[x];
            bool any = false;
            for (int x = 1; x <= k; ++x)
                any = any || (cls[x] % 2 == 1);
            ok = any;
        }
        if (ok)
            return true;
        int i = 0;
        while (i < n && c[i] == k)
            c[i++] = 1;
        if (i == n)
            return false;
        ++c[i];
    }
}

// Minimum k, or nullopt for "unbounded".
inline std::optional<int> brute_min(const graph& g, want w, bool strong)
{
    for (int k = 1; k <= g.num_vertices() + 1; ++k)
        if (exists_coloring(g, k, w, strong))
            return k;
    return std::nullopt;
}

} // namespace oddcolor::test
