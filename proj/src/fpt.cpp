#include "oddcolor/fpt.hpp"

#include <algorithm>

namespace oddcolor {

std::vector<modulator_guess> enumerate_guesses(const graph& g, const std::vector<vertex>& X)
{
    int t = static_cast<int>(X.size());
    std::vector<modulator_guess> out;
    std::vector<color> c(static_cast<size_t>(t), 0), odd(static_cast<size_t>(t), 0);
    auto rec_odd = [&](auto&& self, int j, int top) -> void {
        if (j == t) {
            out.push_back({c, odd, top});
            return;
        }
        for (color i = 1; i <= top + 1; ++i) {
            if (i == c[j])
                continue;
            odd[j] = i;
            self(self, j + 1, std::max(top, i));
        }
    };
    auto rec_c = [&](auto&& self, int j, int top) -> void {
        if (j == t) {
            rec_odd(rec_odd, 0, top);
            return;
        }
        for (color i = 1; i <= top + 1; ++i) {
            bool ok = true;
            for (int u = 0; u < j && ok; ++u)
                ok = !(c[u] == i && g.adjacent(X[u], X[j]));
            if (!ok)
                continue;
            c[j] = i;
            self(self, j + 1, std::max(top, i));
        }
    };
    rec_c(rec_c, 0, 0);
    return out;
}

} // namespace oddcolor
