#include "coarse/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coarse/separator.hpp"

namespace coarse {

int TreeDecomposition::width() const {
    int w = -1;
    for (const TreeNode& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

int TreePartition::width() const {
    int w = 0;
    for (const TreeNode& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()));
    return w;
}

std::vector<std::vector<int>> tree_adjacency(int num_nodes,
                                             const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(num_nodes));
    for (auto [a, b] : edges) {
        if (a < 0 || a >= num_nodes || b < 0 || b >= num_nodes || a == b) continue;
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<int> tree_bfs_hops(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::vector<int> queue;
    dist[static_cast<size_t>(src)] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adj[static_cast<size_t>(u)]) {
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

namespace {

// Shared id/tree/bag hygiene for both structures.
void check_shape(const Graph& g, const std::vector<TreeNode>& nodes,
                 const std::vector<std::pair<int, int>>& edges, std::vector<Violation>& out) {
    int nn = static_cast<int>(nodes.size());
    if (nn == 0) {
        out.push_back({"tree", "no nodes"});
        return;
    }
    for (int i = 0; i < nn; ++i)
        if (nodes[static_cast<size_t>(i)].id != i) {
            out.push_back({"node-ids", "node at index " + std::to_string(i) + " has id " +
                                           std::to_string(nodes[static_cast<size_t>(i)].id)});
            return;
        }

    if (static_cast<int>(edges.size()) != nn - 1)
        out.push_back({"tree", "expected " + std::to_string(nn - 1) + " edges, got " +
                                   std::to_string(edges.size())});
    std::set<std::pair<int, int>> seen;
    bool endpoints_ok = true;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= nn || b < 0 || b >= nn) {
            out.push_back({"tree", "edge endpoint out of range: " + std::to_string(a) + "-" +
                                       std::to_string(b)});
            endpoints_ok = false;
            continue;
        }
        if (a == b) {
            out.push_back({"tree", "loop at node " + std::to_string(a)});
            endpoints_ok = false;
            continue;
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            out.push_back({"tree", "duplicate edge " + std::to_string(a) + "-" +
                                       std::to_string(b)});
            endpoints_ok = false;
        }
    }
    if (endpoints_ok && static_cast<int>(edges.size()) == nn - 1) {
        auto adj = tree_adjacency(nn, edges);
        auto dist = tree_bfs_hops(adj, 0);
        for (int i = 0; i < nn; ++i)
            if (dist[static_cast<size_t>(i)] < 0) {
                out.push_back({"tree", "node " + std::to_string(i) + " disconnected"});
                break;
            }
    }

    for (const TreeNode& node : nodes) {
        for (int v : node.bag)
            if (v < 0 || v >= g.num_vertices()) {
                out.push_back({"bag-range", "node " + std::to_string(node.id) +
                                                " holds out-of-range vertex " +
                                                std::to_string(v)});
                break;
            }
        if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
            std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end())
            out.push_back({"bag-order",
                           "node " + std::to_string(node.id) + " bag not sorted unique"});
    }
}

void check_covers(const Graph& g, const std::vector<TreeNode>& nodes,
                  std::vector<Violation>& out) {
    for (const TreeNode& node : nodes) {
        if (!node.cover) continue;
        Bits covered(g.num_vertices());
        for (const Ball& b : *node.cover) {
            if (b.center < 0 || b.center >= g.num_vertices()) {
                out.push_back({"cover", "node " + std::to_string(node.id) +
                                            " ball center out of range"});
                continue;
            }
            covered |= ball_bits(g, b.center, static_cast<int>(b.radius.floor()));
        }
        for (int v : node.bag)
            if (v >= 0 && v < g.num_vertices() && !covered.test(v)) {
                out.push_back({"cover", "node " + std::to_string(node.id) +
                                            " cover misses vertex " + std::to_string(v)});
                break;
            }
    }
}

bool shape_is_sound(const std::vector<Violation>& v) {
    for (const Violation& x : v)
        if (x.rule == "node-ids" || x.rule == "tree" || x.rule == "bag-range") return false;
    return true;
}

std::string join_ids(const std::vector<int>& ids, size_t cap = 8) {
    std::string s;
    for (size_t i = 0; i < ids.size() && i < cap; ++i) {
        if (i) s += ",";
        s += std::to_string(ids[i]);
    }
    if (ids.size() > cap) s += ",...";
    return s;
}

} // namespace

std::vector<Violation> validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    std::vector<Violation> out;
    check_shape(g, td.nodes, td.edges, out);
    if (!shape_is_sound(out)) return out;

    int n = g.num_vertices();
    int nn = static_cast<int>(td.nodes.size());

    std::vector<std::vector<int>> holding(static_cast<size_t>(n));
    for (const TreeNode& node : td.nodes)
        for (int v : node.bag) holding[static_cast<size_t>(v)].push_back(node.id);

    for (int v = 0; v < n; ++v)
        if (holding[static_cast<size_t>(v)].empty())
            out.push_back({"vertex-coverage", "vertex " + std::to_string(v) + " in no bag"});

    for (auto [u, v] : g.edge_list()) {
        bool inside = false;
        for (int t : holding[static_cast<size_t>(u)]) {
            const auto& bag = td.nodes[static_cast<size_t>(t)].bag;
            if (std::binary_search(bag.begin(), bag.end(), v)) {
                inside = true;
                break;
            }
        }
        if (!inside)
            out.push_back({"edge-coverage", "edge " + std::to_string(u) + "-" +
                                                std::to_string(v) + " in no bag"});
    }

    auto adj = tree_adjacency(nn, td.edges);
    for (int v = 0; v < n; ++v) {
        const auto& hold = holding[static_cast<size_t>(v)];
        if (hold.size() <= 1) continue;
        // BFS within the holding set only.
        std::set<int> in_hold(hold.begin(), hold.end());
        std::vector<int> queue{hold[0]};
        std::set<int> seen{hold[0]};
        for (size_t head = 0; head < queue.size(); ++head)
            for (int w : adj[static_cast<size_t>(queue[head])])
                if (in_hold.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
        if (seen.size() != hold.size())
            out.push_back({"coherence", "vertex " + std::to_string(v) +
                                            " appears in a disconnected set of bags (" +
                                            join_ids(hold) + ")"});
    }

    check_covers(g, td.nodes, out);
    return out;
}

std::vector<Violation> validate_tree_partition(const Graph& g, const TreePartition& tp) {
    std::vector<Violation> out;
    check_shape(g, tp.nodes, tp.edges, out);
    if (!shape_is_sound(out)) return out;
    if (tp.spread < 1) out.push_back({"spread", "claimed spread must be at least 1"});

    int n = g.num_vertices();
    int nn = static_cast<int>(tp.nodes.size());

    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (const TreeNode& node : tp.nodes)
        for (int v : node.bag) {
            if (v < 0 || v >= n) continue;
            if (owner[static_cast<size_t>(v)] >= 0)
                out.push_back({"partition", "vertex " + std::to_string(v) + " in bags " +
                                                std::to_string(owner[static_cast<size_t>(v)]) +
                                                " and " + std::to_string(node.id)});
            else
                owner[static_cast<size_t>(v)] = node.id;
        }
    for (int v = 0; v < n; ++v)
        if (owner[static_cast<size_t>(v)] < 0)
            out.push_back({"partition", "vertex " + std::to_string(v) + " in no bag"});

    bool partition_ok = true;
    for (const Violation& x : out)
        if (x.rule == "partition") partition_ok = false;
    if (!partition_ok) return out;

    auto adj = tree_adjacency(nn, tp.edges);
    auto adjacent_nodes = [&](int a, int b) {
        if (a == b) return true;
        const auto& row = adj[static_cast<size_t>(a)];
        return std::binary_search(row.begin(), row.end(), b);
    };

    for (auto [u, v] : g.edge_list())
        if (!adjacent_nodes(owner[static_cast<size_t>(u)], owner[static_cast<size_t>(v)]))
            out.push_back({"edge-axiom", "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                             " spans bags " +
                                             std::to_string(owner[static_cast<size_t>(u)]) +
                                             " and " +
                                             std::to_string(owner[static_cast<size_t>(v)])});

    if (tp.spread >= 1) {
        for (int u = 0; u < n; ++u) {
            auto hops = g.bfs_hops(u);
            for (int v = u + 1; v < n; ++v) {
                if (hops[v] < 0 || hops[v] > tp.spread) continue;
                if (!adjacent_nodes(owner[static_cast<size_t>(u)], owner[static_cast<size_t>(v)]))
                    out.push_back({"spread",
                                   "vertices " + std::to_string(u) + "," + std::to_string(v) +
                                       " at distance " + std::to_string(hops[v]) +
                                       " span bags " +
                                       std::to_string(owner[static_cast<size_t>(u)]) + " and " +
                                       std::to_string(owner[static_cast<size_t>(v)])});
            }
        }
    }

    check_covers(g, tp.nodes, out);
    return out;
}

TreeDecomposition tree_partition_to_tree_decomposition(const Graph& g, const TreePartition& tp) {
    auto violations = validate_tree_partition(g, tp);
    if (!violations.empty())
        throw InputError("tree partition invalid: " + violations.front().rule + ": " +
                         violations.front().detail);

    TreeDecomposition td;
    td.nodes = tp.nodes;

    std::vector<std::pair<int, int>> sorted_edges;
    sorted_edges.reserve(tp.edges.size());
    for (auto [a, b] : tp.edges) sorted_edges.push_back(std::minmax(a, b));
    std::sort(sorted_edges.begin(), sorted_edges.end());

    int next_id = static_cast<int>(tp.nodes.size());
    for (auto [a, b] : sorted_edges) {
        TreeNode mid;
        mid.id = next_id++;
        const auto& ba = tp.nodes[static_cast<size_t>(a)].bag;
        const auto& bb = tp.nodes[static_cast<size_t>(b)].bag;
        mid.bag.reserve(ba.size() + bb.size());
        std::set_union(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(mid.bag));
        const auto& ca = tp.nodes[static_cast<size_t>(a)].cover;
        const auto& cb = tp.nodes[static_cast<size_t>(b)].cover;
        if (ca && cb) {
            std::vector<Ball> merged = *ca;
            merged.insert(merged.end(), cb->begin(), cb->end());
            std::sort(merged.begin(), merged.end(), [](const Ball& x, const Ball& y) {
                if (x.center != y.center) return x.center < y.center;
                return x.radius < y.radius;
            });
            merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
            mid.cover = std::move(merged);
        }
        td.edges.emplace_back(a, mid.id);
        td.edges.emplace_back(mid.id, b);
        td.nodes.push_back(std::move(mid));
    }
    return td;
}

int balanced_bag(const Graph& g, const TreeDecomposition& td, const WeightFn& mu) {
    auto violations = validate_tree_decomposition(g, td);
    if (!violations.empty())
        throw InputError("tree decomposition invalid: " + violations.front().rule + ": " +
                         violations.front().detail);
    if (mu.size() != g.num_vertices()) throw InputError("weight function size mismatch");

    int nn = static_cast<int>(td.nodes.size());
    if (nn == 1) {
        if (!is_balanced_separator(g, mu, td.nodes[0].bag))
            throw InvariantError("single bag is not balanced");
        return 0;
    }
    auto adj = tree_adjacency(nn, td.edges);

    // Weight of the b-side of edge ab: every vertex appearing in some bag
    // on that side, counted once.
    auto side_weight = [&](int a, int b) {
        std::vector<int> queue{b};
        std::vector<uint8_t> seen(static_cast<size_t>(nn), 0);
        seen[static_cast<size_t>(b)] = 1;
        Bits verts(g.num_vertices());
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int v : td.nodes[static_cast<size_t>(x)].bag) verts.set(v);
            for (int y : adj[static_cast<size_t>(x)]) {
                if (y == a || seen[static_cast<size_t>(y)]) continue;
                seen[static_cast<size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
        return mu.sum_over(verts);
    };

    std::vector<int> indegree(static_cast<size_t>(nn), 0);
    for (auto [a, b] : td.edges) {
        Rat wb = side_weight(a, b);
        Rat wa = side_weight(b, a);
        int target;
        if (wb > wa) target = b;
        else if (wa > wb) target = a;
        else target = std::min(a, b);
        ++indegree[static_cast<size_t>(target)];
    }

    for (int t = 0; t < nn; ++t) {
        if (indegree[static_cast<size_t>(t)] == static_cast<int>(adj[static_cast<size_t>(t)].size())) {
            if (!is_balanced_separator(g, mu, td.nodes[static_cast<size_t>(t)].bag))
                throw InvariantError("sink bag " + std::to_string(t) + " is not balanced");
            return t;
        }
    }
    throw InvariantError("tree orientation has no sink");
}

CoverStats coverability_stats(const Graph& g, const TreeDecomposition& td, int r, int k,
                              SearchMode mode, const Budgets& budgets) {
    if (r < 1) throw InputError("cover radius must be at least 1");
    CoverStats stats;
    for (const TreeNode& node : td.nodes) {
        BagCoverStats bs;
        bs.node = node.id;
        std::vector<Ball> cover;
        if (node.cover) {
            bs.from_attached = true;
            cover = *node.cover;
        } else {
            CoverSearch sr = is_coverable(g, node.bag, k, Rat(r), mode, budgets);
            if (!sr.cover) {
                bs.found = false;
                stats.all_found = false;
                stats.per_bag.push_back(bs);
                continue;
            }
            cover = *sr.cover;
        }
        bs.size = static_cast<int>(cover.size());
        bs.round = true;
        for (const Ball& b : cover) {
            if (b.radius > bs.max_radius) bs.max_radius = b.radius;
            Rat q = b.radius / Rat(r);
            if (!q.is_integer() || q.num() < 1) bs.round = false;
        }
        if (bs.round) {
            unsigned long long phi = 0;
            for (const Ball& b : cover) {
                long long q = (b.radius / Rat(r)).num();
                if (q >= 62) throw InvariantError("cover potential overflow");
                phi += 1ULL << q;
            }
            bs.potential = phi;
            if (!stats.max_potential || phi > *stats.max_potential) stats.max_potential = phi;
        } else {
            stats.all_round = false;
        }
        stats.max_size = std::max(stats.max_size, bs.size);
        stats.per_bag.push_back(bs);
    }
    return stats;
}

TreePartition layered_tree_partition(const Graph& g) {
    TreePartition tp;
    tp.spread = 1;
    int n = g.num_vertices();
    std::vector<uint8_t> seen(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        auto hops = g.bfs_hops(s);
        int depth = 0;
        for (int v = 0; v < n; ++v)
            if (hops[v] >= 0) {
                seen[static_cast<size_t>(v)] = 1;
                depth = std::max(depth, hops[v]);
            }
        int base = static_cast<int>(tp.nodes.size());
        for (int layer = 0; layer <= depth; ++layer) {
            TreeNode node;
            node.id = base + layer;
            for (int v = 0; v < n; ++v)
                if (hops[v] == layer) node.bag.push_back(v);
            tp.nodes.push_back(std::move(node));
        }
        for (int layer = 1; layer <= depth; ++layer)
            tp.edges.emplace_back(base + layer - 1, base + layer);
        if (base > 0) tp.edges.emplace_back(base - 1, base);
    }
    if (tp.nodes.empty()) tp.nodes.push_back(TreeNode{0, {}, std::nullopt});
    return tp;
}

} // namespace coarse
