#include "coarse/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace coarse {

// f[S] = least achievable max elimination degree when the vertices of S are
// eliminated first (in the best order). Eliminating v from G with S already
// gone contracts v's component within S + v; its boundary size is the
// elimination degree. Treewidth = f[V].
int exact_treewidth(const Graph& g, const Budgets& budgets) {
    int n = g.num_vertices();
    if (n > budgets.treewidth_max_n)
        throw BudgetError("exact treewidth limited to n <= " +
                          std::to_string(budgets.treewidth_max_n));
    if (n == 0) return 0;

    std::vector<uint32_t> nbr(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;

    const uint32_t full = (n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    std::vector<int8_t> f(static_cast<size_t>(full) + 1, 0);

    for (uint32_t s = 1; s <= full; ++s) {
        int best = n;
        uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t prior = s & ~(uint32_t{1} << v);
            // component of v in G[prior + v]
            uint32_t inside = prior | (uint32_t{1} << v);
            uint32_t comp = uint32_t{1} << v;
            for (;;) {
                uint32_t grown = comp;
                uint32_t frontier = comp;
                while (frontier) {
                    int u = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    grown |= nbr[u] & inside;
                }
                if (grown == comp) break;
                comp = grown;
            }
            uint32_t boundary = 0;
            uint32_t cf = comp;
            while (cf) {
                int u = std::countr_zero(cf);
                cf &= cf - 1;
                boundary |= nbr[u];
            }
            boundary &= ~inside;
            int width = std::max<int>(f[prior], std::popcount(boundary));
            best = std::min(best, width);
        }
        f[s] = static_cast<int8_t>(best);
    }
    return f[full];
}

} // namespace coarse
