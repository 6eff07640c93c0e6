#include "coarse/cover.hpp"

#include <algorithm>
#include <string>

namespace coarse {

SearchMode search_mode_from_name(const std::string& name) {
    if (name == "exact") return SearchMode::exact;
    if (name == "greedy") return SearchMode::greedy;
    throw InputError("unknown search mode: " + name);
}

std::string search_mode_name(SearchMode mode) {
    return mode == SearchMode::exact ? "exact" : "greedy";
}

int ceil_log2(long long count) {
    if (count < 1) throw Error("ceil_log2 of nonpositive count");
    int m = 0;
    while ((1LL << m) < count) ++m;
    return m;
}

long long binomial_capped(int n, int k, long long cap) {
    if (k < 0 || n < 0) throw Error("binomial with negative argument");
    if (k > n) return 0;
    k = std::min(k, n - k);
    long long c = 1;
    for (int i = 1; i <= k; ++i) {
        __int128 next = static_cast<__int128>(c) * (n - k + i) / i;
        if (next > cap) return cap + 1;
        c = static_cast<long long>(next);
    }
    return c;
}

namespace {

struct CoverContext {
    const std::vector<Bits>* balls;
    const Bits* target;
    int n;
    int k;
};

// Lexicographic DFS over center combinations; the first covering leaf is the
// answer. When a prefix already covers the target the lexicographically
// least completion is the next smallest unused centers.
bool cover_dfs(const CoverContext& ctx, int next_center, int depth, const Bits& covered,
               std::vector<int>& picked) {
    if (ctx.target->is_subset_of(covered)) {
        int c = next_center;
        while (static_cast<int>(picked.size()) < ctx.k) picked.push_back(c++);
        return true;
    }
    if (depth == ctx.k) return false;
    // Need (k - depth) more centers from [next_center, n).
    for (int c = next_center; c <= ctx.n - (ctx.k - depth); ++c) {
        picked.push_back(c);
        Bits u = covered;
        u |= (*ctx.balls)[c];
        if (cover_dfs(ctx, c + 1, depth + 1, u, picked)) return true;
        picked.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<Ball>> cover_exact(const Graph& g, const std::vector<int>& a, int k,
                                             const Rat& radius, const Budgets& budgets) {
    if (k < 0) throw InputError("cover budget k must be nonnegative");
    int n = g.num_vertices();
    if (a.empty()) return std::vector<Ball>{};
    if (radius.is_negative() || k == 0) return std::nullopt;
    int kk = std::min(k, n);

    long long combos = binomial_capped(n, kk, budgets.enumeration_budget);
    if (combos > budgets.enumeration_budget)
        throw BudgetError("cover enumeration needs more than " +
                          std::to_string(budgets.enumeration_budget) + " candidate sets");

    int hop_radius = static_cast<int>(radius.floor());
    std::vector<Bits> balls;
    balls.reserve(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) balls.push_back(ball_bits(g, c, hop_radius));
    Bits target = Bits::of(n, a);

    CoverContext ctx{&balls, &target, n, kk};
    std::vector<int> picked;
    if (!cover_dfs(ctx, 0, 0, Bits(n), picked)) return std::nullopt;

    std::vector<Ball> out;
    out.reserve(picked.size());
    for (int c : picked) out.push_back(Ball{c, radius});
    return out;
}

std::vector<Ball> cover_greedy(const Graph& g, const std::vector<int>& a, const Rat& radius) {
    int n = g.num_vertices();
    std::vector<Ball> out;
    if (a.empty()) return out;
    if (radius.is_negative())
        throw InputError("greedy cover with negative radius cannot make progress");

    int hop_radius = static_cast<int>(radius.floor());
    std::vector<Bits> balls;
    balls.reserve(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) balls.push_back(ball_bits(g, c, hop_radius));

    Bits uncovered = Bits::of(n, a);
    while (uncovered.any()) {
        int best_center = -1;
        int best_gain = 0;
        for (int c = 0; c < n; ++c) {
            Bits gain = balls[c];
            gain &= uncovered;
            int cnt = gain.count();
            if (cnt > best_gain) {
                best_gain = cnt;
                best_center = c;
            }
        }
        // Every uncovered vertex covers itself, so progress is guaranteed.
        uncovered.subtract(balls[best_center]);
        out.push_back(Ball{best_center, radius});
    }
    return out;
}

CoverSearch is_coverable(const Graph& g, const std::vector<int>& a, int k, const Rat& radius,
                         SearchMode mode, const Budgets& budgets) {
    CoverSearch r;
    if (mode == SearchMode::exact) {
        r.cover = cover_exact(g, a, k, radius, budgets);
        r.exact = true;
    } else {
        r.cover = cover_greedy(g, a, radius);
        r.exact = false;
    }
    return r;
}

int estimate_doubling_dimension(const Graph& g, int radius_cap) {
    if (radius_cap < 1) throw InputError("radius cap must be at least 1");
    int n = g.num_vertices();
    int m = 0;
    for (int rp = 1; rp <= radius_cap; ++rp) {
        std::vector<Bits> balls;
        balls.reserve(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) balls.push_back(ball_bits(g, c, rp));
        for (int u = 0; u < n; ++u) {
            std::vector<int> hops = g.bfs_hops(u);
            Bits uncovered = ball_bits(g, u, 2 * rp);
            int used = 0;
            while (uncovered.any()) {
                int best_center = -1;
                int best_gain = 0;
                for (int c = 0; c < n; ++c) {
                    Bits gain = balls[c];
                    gain &= uncovered;
                    int cnt = gain.count();
                    if (cnt == 0) continue;
                    // equal coverage: prefer the center far from u; a
                    // centered pick strands both fringes and inflates the
                    // count (e.g. two balls cover any cycle arc, three if
                    // the first sits in the middle)
                    bool better = cnt > best_gain ||
                                  (cnt == best_gain &&
                                   hops[static_cast<size_t>(c)] >
                                       hops[static_cast<size_t>(best_center)]);
                    if (better) {
                        best_gain = cnt;
                        best_center = c;
                    }
                }
                uncovered.subtract(balls[best_center]);
                ++used;
            }
            if (used > 0) m = std::max(m, ceil_log2(used));
        }
    }
    return m;
}

} // namespace coarse
