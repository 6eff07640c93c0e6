#include "coarse/separator.hpp"

#include <algorithm>
#include <string>

namespace coarse {

bool is_balanced_separator(const Graph& g, const WeightFn& mu, const std::vector<int>& x) {
    if (mu.size() != g.num_vertices()) throw InputError("weight function size mismatch");
    Bits alive(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) alive.set(v);
    for (int v : x) {
        if (v < 0 || v >= g.num_vertices()) throw InputError("separator vertex out of range");
        alive.reset(v);
    }
    Rat total = mu.total();
    for (const Bits& comp : components_bits(g, alive)) {
        Rat w = mu.sum_over(comp);
        if (w + w > total) return false;
    }
    return true;
}

namespace {

Rat heaviest_component(const Graph& g, const WeightFn& mu, const Bits& alive) {
    Rat worst(0);
    for (const Bits& comp : components_bits(g, alive)) {
        Rat w = mu.sum_over(comp);
        if (w > worst) worst = w;
    }
    return worst;
}

bool balanced_on_alive(const Graph& g, const WeightFn& mu, const Bits& alive, const Rat& total) {
    for (const Bits& comp : components_bits(g, alive)) {
        Rat w = mu.sum_over(comp);
        if (w + w > total) return false;
    }
    return true;
}

SeparatorWitness make_witness(const Graph& g, const WeightFn& mu, const std::vector<int>& centers,
                              int r) {
    SeparatorWitness w;
    Bits u(g.num_vertices());
    for (int c : centers) {
        w.balls.push_back(Ball{c, Rat(r)});
        u |= ball_bits(g, c, r);
    }
    w.union_set = u.to_vector();
    w.balanced_for = mu;
    return w;
}

// Lexicographic DFS over center combinations. Returns the first center set
// whose ball union is balanced; prefix success cannot be shortcut here
// because balance is not monotone in the prefix alone.
bool separator_dfs(const Graph& g, const WeightFn& mu, const std::vector<Bits>& balls,
                   const Rat& total, int k, int next_center, const Bits& unioned,
                   std::vector<int>& picked) {
    if (static_cast<int>(picked.size()) == k) {
        Bits alive(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) alive.set(v);
        alive.subtract(unioned);
        return balanced_on_alive(g, mu, alive, total);
    }
    int depth = static_cast<int>(picked.size());
    for (int c = next_center; c <= g.num_vertices() - (k - depth); ++c) {
        picked.push_back(c);
        Bits u = unioned;
        u |= balls[c];
        if (separator_dfs(g, mu, balls, total, k, c + 1, u, picked)) return true;
        picked.pop_back();
    }
    return false;
}

} // namespace

std::optional<SeparatorWitness> find_separator(const Graph& g, const WeightFn& mu, int k, int r,
                                               SearchMode mode, const Budgets& budgets) {
    if (mu.size() != g.num_vertices()) throw InputError("weight function size mismatch");
    if (k < 1) throw InputError("separator ball budget must be positive");
    if (r < 0) throw InputError("separator radius must be nonnegative");
    int n = g.num_vertices();
    if (n == 0) return make_witness(g, mu, {}, r);
    int kk = std::min(k, n);

    if (mode == SearchMode::exact) {
        long long combos = binomial_capped(n, kk, budgets.enumeration_budget);
        if (combos > budgets.enumeration_budget)
            throw BudgetError("separator enumeration needs more than " +
                              std::to_string(budgets.enumeration_budget) + " candidate sets");
        std::vector<Bits> balls;
        balls.reserve(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) balls.push_back(ball_bits(g, c, r));
        std::vector<int> picked;
        if (!separator_dfs(g, mu, balls, mu.total(), kk, 0, Bits(n), picked))
            return std::nullopt;
        return make_witness(g, mu, picked, r);
    }

    std::vector<Bits> balls;
    balls.reserve(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) balls.push_back(ball_bits(g, c, r));

    Rat total = mu.total();
    Bits unioned(n);
    std::vector<int> picked;
    for (int step = 0; step < kk; ++step) {
        Bits alive(n);
        for (int v = 0; v < n; ++v) alive.set(v);
        alive.subtract(unioned);
        if (balanced_on_alive(g, mu, alive, total)) break;

        int best_center = -1;
        Rat best_worst(0);
        for (int c = 0; c < n; ++c) {
            Bits next_alive = alive;
            next_alive.subtract(balls[c]);
            Rat worst = heaviest_component(g, mu, next_alive);
            if (best_center < 0 || worst < best_worst) {
                best_center = c;
                best_worst = worst;
            }
        }
        picked.push_back(best_center);
        unioned |= balls[best_center];
    }

    Bits alive(n);
    for (int v = 0; v < n; ++v) alive.set(v);
    alive.subtract(unioned);
    if (!balanced_on_alive(g, mu, alive, total)) return std::nullopt;
    return make_witness(g, mu, picked, r);
}

std::optional<int> bsn_over_indicators(const Graph& g, int r, int k_max, const Budgets& budgets) {
    if (r < 0) throw InputError("separator radius must be nonnegative");
    if (k_max < 1) throw InputError("k_max must be positive");
    int n = g.num_vertices();
    if (n > budgets.indicator_max_n)
        throw BudgetError("indicator sweep over 2^" + std::to_string(n) +
                          " weightings exceeds the budget (max n " +
                          std::to_string(budgets.indicator_max_n) + ")");
    if (n == 0) return 1;
    if (n > 30) throw BudgetError("indicator sweep limited to n <= 30");

    std::vector<uint32_t> nbr(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;

    std::vector<uint32_t> ball_mask(static_cast<size_t>(n), 0);
    for (int c = 0; c < n; ++c)
        for (int v : ball_vertices(g, c, Rat(r))) ball_mask[c] |= uint32_t{1} << v;

    const uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;

    // Component masks of g minus a vertex mask.
    auto comps_of = [&](uint32_t removed) {
        std::vector<uint32_t> comps;
        uint32_t left = full & ~removed;
        while (left) {
            uint32_t seed = left & (~left + 1);
            uint32_t comp = seed;
            for (;;) {
                uint32_t frontier = comp;
                uint32_t grown = comp;
                while (frontier) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    grown |= nbr[v] & ~removed;
                }
                if (grown == comp) break;
                comp = grown;
            }
            comps.push_back(comp);
            left &= ~comp;
        }
        return comps;
    };

    for (int k = 1; k <= k_max; ++k) {
        int kk = std::min(k, n);
        // Precompute the component structure for every center set once.
        std::vector<std::vector<uint32_t>> all_comps;
        std::vector<int> sel(kk);
        for (int i = 0; i < kk; ++i) sel[i] = i;
        for (;;) {
            uint32_t removed = 0;
            for (int c : sel) removed |= ball_mask[c];
            all_comps.push_back(comps_of(removed));
            int i = kk - 1;
            while (i >= 0 && sel[i] == n - kk + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < kk; ++j) sel[j] = sel[j - 1] + 1;
        }

        bool all_weightings_ok = true;
        const uint64_t mask_count = uint64_t{1} << n;
        for (uint64_t wm = 0; wm < mask_count && all_weightings_ok; ++wm) {
            uint32_t w = static_cast<uint32_t>(wm);
            int tot = std::popcount(w);
            if (tot <= 1) continue; // a single weighted vertex sits inside its own ball
            bool found = false;
            for (const auto& comps : all_comps) {
                bool ok = true;
                for (uint32_t comp : comps) {
                    if (2 * std::popcount(comp & w) > tot) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (!found) all_weightings_ok = false;
        }
        if (all_weightings_ok) return k;
    }
    return std::nullopt;
}

} // namespace coarse
