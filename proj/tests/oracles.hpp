#pragma once

// Brute-force reference implementations used to freeze expected values in
// the tests. Deliberately independent of the library: plain vectors and
// queues only, no shared helpers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline std::vector<std::vector<int>> adjacency(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    return adj;
}

inline std::vector<int> bfs_hops(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::vector<int> queue{src};
    dist[static_cast<size_t>(src)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adj[static_cast<size_t>(u)])
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

inline std::vector<int> ball(const std::vector<std::vector<int>>& adj, int center, int radius) {
    std::vector<int> dist = bfs_hops(adj, center);
    std::vector<int> out;
    for (size_t v = 0; v < adj.size(); ++v)
        if (dist[v] >= 0 && dist[v] <= radius) out.push_back(static_cast<int>(v));
    return out;
}

inline std::vector<std::vector<int>> components_without(
    const std::vector<std::vector<int>>& adj, const std::vector<char>& removed) {
    int n = static_cast<int>(adj.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (removed[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp{s};
        seen[static_cast<size_t>(s)] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int v : adj[static_cast<size_t>(comp[head])])
                if (!removed[static_cast<size_t>(v)] && !seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Integer weights keep the oracle exact without any rational type.
inline bool is_balanced(const std::vector<std::vector<int>>& adj, const std::vector<char>& x,
                        const std::vector<long long>& weights) {
    long long total = 0;
    for (long long w : weights) total += w;
    for (const auto& comp : components_without(adj, x)) {
        long long w = 0;
        for (int v : comp) w += weights[static_cast<size_t>(v)];
        if (2 * w > total) return false;
    }
    return true;
}

// Does some set of at most k radius-r balls cover a and balance nothing?
// Existence only; enumerates all center subsets of size up to k.
inline bool coverable(int n, const EdgeList& edges, const std::vector<int>& a, int k, int r) {
    auto adj = adjacency(n, edges);
    if (a.empty()) return true;
    if (k <= 0 || r < 0) return false;
    std::vector<std::vector<char>> in_ball(static_cast<size_t>(n),
                                           std::vector<char>(static_cast<size_t>(n), 0));
    for (int c = 0; c < n; ++c)
        for (int v : ball(adj, c, r)) in_ball[static_cast<size_t>(c)][static_cast<size_t>(v)] = 1;
    std::vector<int> centers(static_cast<size_t>(std::min(k, n)));
    // odometer over nondecreasing center tuples (repeats allowed, harmless)
    std::vector<int> idx(centers.size(), 0);
    while (true) {
        bool all = true;
        for (int v : a) {
            bool hit = false;
            for (int c : idx)
                if (in_ball[static_cast<size_t>(c)][static_cast<size_t>(v)]) {
                    hit = true;
                    break;
                }
            if (!hit) {
                all = false;
                break;
            }
        }
        if (all) return true;
        int pos = static_cast<int>(idx.size()) - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - 1) --pos;
        if (pos < 0) return false;
        int next = idx[static_cast<size_t>(pos)] + 1;
        for (size_t i = static_cast<size_t>(pos); i < idx.size(); ++i)
            idx[i] = next;
    }
}

// Is there a balanced separator made of at most k radius-r balls?
inline bool separator_exists(int n, const EdgeList& edges, const std::vector<long long>& weights,
                             int k, int r) {
    auto adj = adjacency(n, edges);
    std::vector<int> idx(static_cast<size_t>(std::min(k, n)), 0);
    while (true) {
        std::vector<char> removed(static_cast<size_t>(n), 0);
        for (int c : idx)
            for (int v : ball(adj, c, r)) removed[static_cast<size_t>(v)] = 1;
        if (is_balanced(adj, removed, weights)) return true;
        int pos = static_cast<int>(idx.size()) - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - 1) --pos;
        if (pos < 0) return false;
        int next = idx[static_cast<size_t>(pos)] + 1;
        for (size_t i = static_cast<size_t>(pos); i < idx.size(); ++i)
            idx[i] = next;
    }
}

// Smallest k such that every 0/1 weighting has a balanced separator of k
// radius-r balls; nullopt if k_max is not enough.
inline std::optional<int> bsn(int n, const EdgeList& edges, int r, int k_max) {
    for (int k = 1; k <= k_max; ++k) {
        bool all = true;
        for (unsigned mask = 0; mask < (1u << n) && all; ++mask) {
            std::vector<long long> w(static_cast<size_t>(n), 0);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) w[static_cast<size_t>(v)] = 1;
            if (!separator_exists(n, edges, w, k, r)) all = false;
        }
        if (all) return k;
    }
    return std::nullopt;
}

// Exact treewidth as the best elimination order, n <= 8.
inline int elimination_treewidth(int n, const EdgeList& edges) {
    if (n <= 1) return 0;
    std::vector<std::uint16_t> base(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
        base[static_cast<size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        base[static_cast<size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    }
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n - 1;
    do {
        auto adj = base;
        std::uint16_t alive = static_cast<std::uint16_t>((1u << n) - 1);
        int width = 0;
        for (int v : order) {
            std::uint16_t nbrs = static_cast<std::uint16_t>(adj[static_cast<size_t>(v)] & alive &
                                                            ~(1u << v));
            width = std::max(width, std::popcount(nbrs));
            if (width >= best) break;
            for (int u = 0; u < n; ++u)
                if (nbrs & (1u << u))
                    adj[static_cast<size_t>(u)] |= nbrs;
            alive = static_cast<std::uint16_t>(alive & ~(1u << v));
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// ---- isomorphism-free enumeration of connected graphs ----

inline int edge_slot(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    int slot = 0;
    for (int a = 0; a < i; ++a) slot += n - 1 - a;
    return slot + (j - i - 1);
}

// Per permutation of n vertices, where each edge slot lands. Cached: the
// n = 7 table (5040 permutations x 21 slots) is built once.
inline const std::vector<std::vector<int>>& perm_slot_maps(int n) {
    static std::vector<std::vector<std::vector<int>>> cache(9);
    auto& maps = cache[static_cast<size_t>(n)];
    if (maps.empty()) {
        int slots = n * (n - 1) / 2;
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> map(static_cast<size_t>(slots));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    map[static_cast<size_t>(edge_slot(n, i, j))] =
                        edge_slot(n, perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
            maps.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return maps;
}

inline std::uint32_t canonical_mask(int n, std::uint32_t mask) {
    std::uint32_t best = mask;
    for (const auto& map : perm_slot_maps(n)) {
        std::uint32_t out = 0;
        std::uint32_t m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            out |= 1u << map[static_cast<size_t>(b)];
        }
        if (out < best) best = out;
    }
    return best;
}

inline EdgeList edges_of_mask(int n, std::uint32_t mask) {
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask & (1u << edge_slot(n, i, j))) edges.emplace_back(i, j);
    return edges;
}

// All connected graphs on exactly n vertices up to isomorphism, as edge
// masks. Grown by attaching vertex k to every nonempty subset of 0..k-1;
// every connected graph has a non-cut vertex, so nothing is missed.
inline std::vector<std::uint32_t> connected_graphs(int n) {
    std::set<std::uint32_t> cur{0}; // K1
    for (int k = 1; k < n; ++k) {
        std::set<std::uint32_t> next;
        for (std::uint32_t mask : cur) {
            EdgeList edges = edges_of_mask(k, mask);
            for (std::uint32_t nb = 1; nb < (1u << k); ++nb) {
                std::uint32_t grown = 0;
                for (auto [u, v] : edges) grown |= 1u << edge_slot(k + 1, u, v);
                for (int u = 0; u < k; ++u)
                    if (nb & (1u << u)) grown |= 1u << edge_slot(k + 1, u, k);
                next.insert(canonical_mask(k + 1, grown));
            }
        }
        cur = std::move(next);
    }
    return std::vector<std::uint32_t>(cur.begin(), cur.end());
}

} // namespace oracle
