#include "coarse/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <tuple>

namespace coarse {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + "-" +
                             std::to_string(v));
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw InputError("duplicate edge " + std::to_string(key.first) + "-" +
                             std::to_string(key.second));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = static_cast<long long>(seen.size());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::bfs_hops(int src) const {
    if (src < 0 || src >= n_) throw InputError("bfs source out of range");
    std::vector<int> dist(n_, -1);
    std::vector<int> queue;
    queue.reserve(n_);
    dist[src] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adj_[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto d = bfs_hops(0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

WeightedGraph WeightedGraph::from_edges(int n,
                                        const std::vector<std::tuple<int, int, Rat>>& edges) {
    WeightedGraph g(n);
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v, w] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + "-" +
                             std::to_string(v));
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        if (w.is_negative()) throw InputError("negative edge weight on " + std::to_string(u) +
                                              "-" + std::to_string(v));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw InputError("duplicate edge " + std::to_string(key.first) + "-" +
                             std::to_string(key.second));
        g.adj_[u].push_back({v, w});
        g.adj_[v].push_back({u, w});
    }
    auto by_target = [](const Arc& a, const Arc& b) { return a.to < b.to; };
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end(), by_target);
    g.m_ = static_cast<long long>(seen.size());
    return g;
}

std::vector<std::optional<Rat>> WeightedGraph::dijkstra(int src) const {
    if (src < 0 || src >= n_) throw InputError("dijkstra source out of range");
    std::vector<std::optional<Rat>> dist(n_);
    std::vector<uint8_t> done(n_, 0);
    // (distance, vertex) min-queue; Rat has no std::hash but orders exactly.
    using Item = std::pair<Rat, int>;
    auto cmp = [](const Item& a, const Item& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    dist[src] = Rat(0);
    pq.push({Rat(0), src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (const Arc& arc : adj_[u]) {
            Rat nd = d + arc.weight;
            if (!dist[arc.to] || nd < *dist[arc.to]) {
                dist[arc.to] = nd;
                pq.push({nd, arc.to});
            }
        }
    }
    return dist;
}

std::optional<Rat> WeightedGraph::min_edge_weight() const {
    std::optional<Rat> best;
    for (int u = 0; u < n_; ++u)
        for (const Arc& arc : adj_[u])
            if (!best || arc.weight < *best) best = arc.weight;
    return best;
}

Graph WeightedGraph::skeleton() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_; ++u)
        for (const Arc& arc : adj_[u])
            if (u < arc.to) edges.emplace_back(u, arc.to);
    return Graph::from_edges(n_, edges);
}

std::vector<std::tuple<int, int, Rat>> WeightedGraph::edge_list() const {
    std::vector<std::tuple<int, int, Rat>> out;
    for (int u = 0; u < n_; ++u)
        for (const Arc& arc : adj_[u])
            if (u < arc.to) out.emplace_back(u, arc.to, arc.weight);
    return out;
}

DistanceMap distance_map(const Graph& g, int source) {
    DistanceMap dm;
    dm.source = source;
    auto hops = g.bfs_hops(source);
    dm.dist.resize(hops.size());
    dm.reachable.resize(hops.size(), 0);
    for (size_t v = 0; v < hops.size(); ++v) {
        if (hops[v] >= 0) {
            dm.dist[v] = Rat(hops[v]);
            dm.reachable[v] = 1;
        }
    }
    return dm;
}

DistanceMap distance_map(const WeightedGraph& g, int source) {
    DistanceMap dm;
    dm.source = source;
    auto d = g.dijkstra(source);
    dm.dist.resize(d.size());
    dm.reachable.resize(d.size(), 0);
    for (size_t v = 0; v < d.size(); ++v) {
        if (d[v]) {
            dm.dist[v] = *d[v];
            dm.reachable[v] = 1;
        }
    }
    return dm;
}

std::vector<int> ball_vertices(const Graph& g, int center, const Rat& radius) {
    if (radius.is_negative()) return {};
    auto hops = g.bfs_hops(center);
    long long cap = radius.floor();
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (hops[v] >= 0 && hops[v] <= cap) out.push_back(v);
    return out;
}

std::vector<int> ball_vertices(const WeightedGraph& g, int center, const Rat& radius) {
    if (radius.is_negative()) return {};
    auto d = g.dijkstra(center);
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (d[v] && *d[v] <= radius) out.push_back(v);
    return out;
}

Bits ball_bits(const Graph& g, int center, int radius) {
    Bits b(g.num_vertices());
    if (radius < 0) return b;
    // Bounded BFS: no need to explore past the radius.
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<int> queue;
    dist[center] = 0;
    queue.push_back(center);
    b.set(center);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        if (dist[u] == radius) continue;
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                b.set(v);
                queue.push_back(v);
            }
        }
    }
    return b;
}

std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& removed) {
    Bits alive(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) alive.set(v);
    for (int v : removed) {
        if (v < 0 || v >= g.num_vertices()) throw InputError("removed vertex out of range");
        alive.reset(v);
    }
    std::vector<std::vector<int>> out;
    for (const Bits& comp : components_bits(g, alive)) out.push_back(comp.to_vector());
    return out;
}

std::vector<Bits> components_bits(const Graph& g, const Bits& alive) {
    std::vector<Bits> out;
    Bits seen(g.num_vertices());
    std::vector<int> queue;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (!alive.test(s) || seen.test(s)) continue;
        Bits comp(g.num_vertices());
        queue.clear();
        queue.push_back(s);
        seen.set(s);
        comp.set(s);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (alive.test(v) && !seen.test(v)) {
                    seen.set(v);
                    comp.set(v);
                    queue.push_back(v);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> max_distance_r_independent_set(const Graph& g, int r) {
    if (r < 0) throw InputError("independent set radius must be nonnegative");
    int n = g.num_vertices();
    // blocked[v] = within distance r of a chosen vertex
    Bits blocked(n);
    std::vector<int> chosen;
    for (int v = 0; v < n; ++v) {
        if (blocked.test(v)) continue;
        chosen.push_back(v);
        blocked |= ball_bits(g, v, r);
    }
    return chosen;
}

bool is_distance_r_independent(const Graph& g, const std::vector<int>& verts, int r) {
    for (size_t i = 0; i < verts.size(); ++i) {
        auto hops = g.bfs_hops(verts[i]);
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int d = hops[verts[j]];
            if (d >= 0 && d <= r) return false;
        }
    }
    return true;
}

const std::vector<int>& DistanceOracle::row(int src) const {
    auto& slot = rows_[src];
    if (!slot) slot = std::make_unique<std::vector<int>>(g_->bfs_hops(src));
    return *slot;
}

} // namespace coarse
