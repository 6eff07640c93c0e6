#include "coarse/transforms.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <string>

namespace coarse {

namespace {

std::string pair_name(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

} // namespace

MapCheckResult check_map_quasi_isometry(const Graph& g, const WeightedGraph& h,
                                        const std::vector<int>& phi, const Rat& alpha,
                                        const Rat& beta) {
    int n = g.num_vertices();
    int hn = h.num_vertices();
    if (static_cast<int>(phi.size()) != n) throw InputError("phi size mismatch");
    for (int v : phi)
        if (v < 0 || v >= hn) throw InputError("phi value out of range");
    if (alpha < Rat(1)) throw InputError("alpha must be at least 1");
    if (beta.is_negative()) throw InputError("beta must be nonnegative");

    MapCheckResult res;
    res.worst_lower.valid = false;
    res.worst_upper.valid = false;

    // One Dijkstra row per distinct image vertex.
    std::vector<std::vector<std::optional<Rat>>> h_row(static_cast<size_t>(hn));
    std::vector<uint8_t> have_row(static_cast<size_t>(hn), 0);
    auto row_of = [&](int w) -> const std::vector<std::optional<Rat>>& {
        if (!have_row[static_cast<size_t>(w)]) {
            h_row[static_cast<size_t>(w)] = h.dijkstra(w);
            have_row[static_cast<size_t>(w)] = 1;
        }
        return h_row[static_cast<size_t>(w)];
    };

    for (int u = 0; u < n; ++u) {
        std::vector<int> g_row = g.bfs_hops(u);
        const auto& hu = row_of(phi[static_cast<size_t>(u)]);
        for (int v = u; v < n; ++v) {
            bool g_conn = g_row[static_cast<size_t>(v)] >= 0;
            const auto& dh_opt = hu[static_cast<size_t>(phi[static_cast<size_t>(v)])];
            if (!g_conn && !dh_opt) continue;
            if (g_conn != static_cast<bool>(dh_opt)) {
                res.ok = false;
                if (res.failure.empty())
                    res.failure = "pair " + pair_name(u, v) +
                                  " is connected in exactly one metric";
                continue;
            }
            ++res.pairs_checked;
            Rat dg(g_row[static_cast<size_t>(v)]);
            Rat dh = *dh_opt;
            // dist_G/alpha - beta <= dist_H  <=>  dist_G <= alpha*(dist_H + beta)
            Rat lower_slack = alpha * (dh + beta) - dg;
            Rat upper_slack = alpha * dg + beta - dh;
            if (!res.worst_lower.valid || lower_slack < res.worst_lower.slack)
                res.worst_lower = PairWitness{u, v, dg, dh, lower_slack, true};
            if (!res.worst_upper.valid || upper_slack < res.worst_upper.slack)
                res.worst_upper = PairWitness{u, v, dg, dh, upper_slack, true};
            if (lower_slack.is_negative() || upper_slack.is_negative()) {
                res.ok = false;
                if (res.failure.empty())
                    res.failure = "pair " + pair_name(u, v) + " distorted: dist_G " + dg.str() +
                                  ", dist_H " + dh.str();
            }
        }
    }

    // Density: every H vertex within beta of the image.
    std::set<int> image(phi.begin(), phi.end());
    res.density = Rat(0);
    for (int w = 0; w < hn; ++w) {
        std::optional<Rat> best;
        const auto& row = row_of(w);
        for (int img : image) {
            const auto& d = row[static_cast<size_t>(img)];
            if (d && (!best || *d < *best)) best = *d;
        }
        if (!best) {
            res.ok = false;
            if (res.failure.empty())
                res.failure = "vertex " + std::to_string(w) + " of H is unreachable from the image";
            continue;
        }
        if (*best > res.density) {
            res.density = *best;
            res.density_witness = w;
        }
    }
    if (res.density > beta) {
        res.ok = false;
        if (res.failure.empty())
            res.failure = "vertex " + std::to_string(res.density_witness) + " of H lies " +
                          res.density.str() + " > " + beta.str() + " from the image";
    }
    return res;
}

WeightedTransfer separator_transfer_weighted(const Graph& g, const DistanceGraph& dg,
                                             const WeightFn& mu_h, int k, int m_hat,
                                             SearchMode mode, const Budgets& budgets) {
    if (!dg.weighted) throw InputError("weighted transfer needs the weighted variant");
    if (dg.sigma != 3) throw InputError("weighted transfer needs sigma = 3");
    if (dg.host_n != g.num_vertices()) throw InputError("distance graph host size mismatch");
    if (mu_h.size() != dg.h.num_vertices()) throw InputError("weight function size mismatch");
    if (k < 1) throw InputError("k must be positive");
    if (m_hat < 0) throw InputError("doubling estimate must be nonnegative");

    // Copy mu_H onto the members, zero elsewhere.
    std::vector<Rat> w(static_cast<size_t>(g.num_vertices()), Rat(0));
    for (size_t i = 0; i < dg.members.size(); ++i)
        w[static_cast<size_t>(dg.members[i])] = mu_h.at(static_cast<int>(i));
    WeightFn mu_g(std::move(w));

    auto witness = find_separator(g, mu_g, k, dg.r, mode, budgets);
    if (!witness) throw DecomposeError("separator oracle failed in the host graph");

    WeightedTransfer out;
    out.source_balls = witness->balls;
    out.m_hat = m_hat;

    Bits x_bits(dg.h.num_vertices());
    for (const Ball& b : witness->balls) {
        std::vector<int> hops = g.bfs_hops(b.center);
        int best = -1;
        int best_dist = -1;
        for (size_t i = 0; i < dg.members.size(); ++i) {
            int d = hops[static_cast<size_t>(dg.members[i])];
            if (d < 0) continue;
            if (best < 0 || d < best_dist) {
                best = static_cast<int>(i);
                best_dist = d;
            }
        }
        // Inclusion-maximality puts a member within r of every vertex.
        if (best < 0 || best_dist > dg.r)
            throw InvariantError("no member within r of ball center " +
                                 std::to_string(b.center));
        out.reps.push_back(best);
        std::vector<int> h_hops = dg.h.bfs_hops(best);
        for (int i = 0; i < dg.h.num_vertices(); ++i)
            if (h_hops[static_cast<size_t>(i)] >= 0 && h_hops[static_cast<size_t>(i)] <= 2)
                x_bits.set(i);
    }
    out.x_h = x_bits.to_vector();

    if (!is_balanced_separator(dg.h, mu_h, out.x_h))
        throw InvariantError("transferred separator is not balanced");

    int exp = 6 * m_hat;
    if (exp >= 62) {
        out.bound_overflow = true;
        out.size_bound = 0;
    } else {
        out.size_bound = static_cast<unsigned long long>(k) * (1ULL << exp);
        if (static_cast<unsigned long long>(out.x_h.size()) > out.size_bound)
            throw InvariantError("transferred separator size " + std::to_string(out.x_h.size()) +
                                 " exceeds k * 2^(6m) = " + std::to_string(out.size_bound));
    }
    return out;
}

UnweightedTransfer separator_transfer_unweighted(const Graph& g, const DistanceGraph& dg,
                                                 const PhiMap& phi, const WeightFn& mu_h, int d,
                                                 SearchMode mode, const Budgets& budgets) {
    if (dg.weighted) throw InputError("unweighted transfer needs the unweighted variant");
    if (dg.sigma != 4) throw InputError("unweighted transfer needs sigma = 4");
    if (dg.host_n != g.num_vertices()) throw InputError("distance graph host size mismatch");
    if (phi.size() != g.num_vertices()) throw InputError("phi size mismatch");
    if (mu_h.size() != dg.h.num_vertices()) throw InputError("weight function size mismatch");
    if (d < 1) throw InputError("d must be positive");

    std::vector<Rat> w(static_cast<size_t>(g.num_vertices()), Rat(0));
    for (size_t i = 0; i < dg.members.size(); ++i)
        w[static_cast<size_t>(dg.members[i])] = mu_h.at(static_cast<int>(i));
    WeightFn mu_g(std::move(w));

    auto witness = find_separator(g, mu_g, d, dg.r, mode, budgets);
    if (!witness) throw DecomposeError("separator oracle failed in the host graph");

    UnweightedTransfer out;
    out.source_balls = witness->balls;

    std::set<int> y_set;
    for (const Ball& b : witness->balls) y_set.insert(dg.index_of_member(phi[b.center]));
    out.y.assign(y_set.begin(), y_set.end());

    Bits union_bits(dg.h.num_vertices());
    std::vector<Ball> balls;
    for (int y : out.y) {
        balls.push_back(Ball{y, Rat(1)});
        union_bits.set(y);
        for (int nb : dg.h.neighbors(y)) union_bits.set(nb);
    }
    std::vector<int> union_set = union_bits.to_vector();
    if (!is_balanced_separator(dg.h, mu_h, union_set))
        throw InvariantError("projected separator is not balanced");
    if (static_cast<int>(balls.size()) > d)
        throw InvariantError("projected separator uses more than d balls");

    out.witness_h = SeparatorWitness{std::move(balls), std::move(union_set), mu_h};
    return out;
}

int CoarseningParams::p() const {
    Rat q = (alpha + beta) / gamma;
    long long c = q.ceil();
    if (c < 1) c = 1;
    return static_cast<int>(c);
}

LevelClusters build_level_clusters(int num_nodes, const std::vector<std::pair<int, int>>& edges,
                                   int p) {
    if (num_nodes < 1) throw InputError("cluster construction needs at least one node");
    if (p < 1) throw InputError("level stride must be positive");

    LevelClusters lc;
    lc.root = 0;
    lc.p = p;
    auto adj = tree_adjacency(num_nodes, edges);
    lc.depth = tree_bfs_hops(adj, lc.root);

    for (int x = 0; x < num_nodes; ++x)
        if (lc.depth[static_cast<size_t>(x)] >= 0 && lc.depth[static_cast<size_t>(x)] % p == 0)
            lc.level_set.push_back(x);

    std::vector<std::vector<int>> dist_rows;
    dist_rows.reserve(lc.level_set.size());
    for (int y : lc.level_set) dist_rows.push_back(tree_bfs_hops(adj, y));

    lc.clusters.assign(lc.level_set.size(), {});
    std::vector<int> hits(static_cast<size_t>(num_nodes), 0);
    lc.cluster_of.assign(static_cast<size_t>(num_nodes), -1);
    for (size_t yi = 0; yi < lc.level_set.size(); ++yi) {
        int y = lc.level_set[yi];
        for (int x = 0; x < num_nodes; ++x) {
            int dx = lc.depth[static_cast<size_t>(x)];
            if (dx < 0) continue;
            bool member;
            if (y == lc.root) {
                member = dx < 2 * p;
            } else {
                int d = dist_rows[yi][static_cast<size_t>(x)];
                member = d >= p && d < 2 * p && dx > lc.depth[static_cast<size_t>(y)];
            }
            if (member) {
                lc.clusters[yi].push_back(x);
                ++hits[static_cast<size_t>(x)];
                lc.cluster_of[static_cast<size_t>(x)] = static_cast<int>(yi);
            }
        }
    }
    for (int x = 0; x < num_nodes; ++x)
        if (hits[static_cast<size_t>(x)] != 1) {
            lc.assignment_errors.push_back(x);
            if (hits[static_cast<size_t>(x)] == 0) lc.cluster_of[static_cast<size_t>(x)] = -1;
        }

    for (size_t i = 0; i < lc.level_set.size(); ++i)
        for (size_t j = i + 1; j < lc.level_set.size(); ++j) {
            int d = dist_rows[i][static_cast<size_t>(lc.level_set[j])];
            int gap = lc.depth[static_cast<size_t>(lc.level_set[i])] -
                      lc.depth[static_cast<size_t>(lc.level_set[j])];
            if (gap < 0) gap = -gap;
            if (d == p && gap == p)
                lc.coarse_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return lc;
}

namespace {

long long saturating_pow(long long base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && v > LLONG_MAX / 2 / base) return LLONG_MAX / 2;
        v *= base;
    }
    return v;
}

long long saturating_geo_sum(long long base, int terms) {
    long long s = 0;
    long long term = 1;
    for (int i = 0; i < terms; ++i) {
        if (s > LLONG_MAX / 2 - term) return LLONG_MAX / 2;
        s += term;
        if (base != 0 && term > LLONG_MAX / 2 / base) return LLONG_MAX / 2;
        term *= base;
    }
    return s;
}

} // namespace

CoarsenResult coarsen_tree_partition(const Graph& g, const WeightedGraph& h,
                                     const std::vector<int>& phi, const TreePartition& tp_h,
                                     const CoarseningParams& params) {
    if (params.alpha < Rat(1) || params.beta < Rat(1))
        throw InputError("alpha and beta must be at least 1");
    if (params.gamma.is_negative() || params.gamma.is_zero())
        throw InputError("gamma must be positive");
    if (params.r < 1) throw InputError("r must be positive");

    Graph h_skel = h.skeleton();
    auto violations = validate_tree_partition(h_skel, tp_h);
    if (!violations.empty())
        throw InputError("input tree partition invalid: " + violations.front().rule + ": " +
                         violations.front().detail);

    Rat gamma_r = params.gamma * Rat(params.r);
    if (auto mw = h.min_edge_weight(); mw && *mw < gamma_r)
        throw InputError("H has an edge lighter than gamma*r");

    Rat beta_r = params.beta * Rat(params.r);
    MapCheckResult qi = check_map_quasi_isometry(g, h, phi, params.alpha, beta_r);
    if (!qi.ok) throw InputError("phi is not an (alpha, beta*r)-quasi-isometry: " + qi.failure);

    int nn = static_cast<int>(tp_h.nodes.size());
    int p = params.p();
    CoarsenResult res;
    res.clusters = build_level_clusters(nn, tp_h.edges, p);
    const LevelClusters& lc = res.clusters;
    if (!lc.assignment_errors.empty())
        throw InvariantError("cluster rules do not partition the tree: " +
                             std::to_string(lc.assignment_errors.size()) +
                             " node(s) unassigned or doubly assigned, first is node " +
                             std::to_string(lc.assignment_errors.front()));

    // Non-adjacent clusters keep their nodes more than p apart in T.
    auto t_adj = tree_adjacency(nn, tp_h.edges);
    std::vector<std::vector<int>> t_dist;
    t_dist.reserve(static_cast<size_t>(nn));
    for (int x = 0; x < nn; ++x) t_dist.push_back(tree_bfs_hops(t_adj, x));
    std::set<std::pair<int, int>> coarse_adj;
    for (auto [a, b] : lc.coarse_edges) {
        coarse_adj.emplace(a, b);
        coarse_adj.emplace(b, a);
    }
    for (int x = 0; x < nn; ++x)
        for (int xp = x + 1; xp < nn; ++xp) {
            int cy = lc.cluster_of[static_cast<size_t>(x)];
            int cyp = lc.cluster_of[static_cast<size_t>(xp)];
            if (cy == cyp) continue;
            if (coarse_adj.count({cy, cyp})) continue;
            if (t_dist[static_cast<size_t>(x)][static_cast<size_t>(xp)] <= p)
                throw InvariantError("nodes " + std::to_string(x) + " and " + std::to_string(xp) +
                                     " of non-adjacent clusters are only " +
                                     std::to_string(
                                         t_dist[static_cast<size_t>(x)][static_cast<size_t>(xp)]) +
                                     " apart");
        }

    // Fibers of phi, ascending within each fiber.
    std::vector<std::vector<int>> fiber(static_cast<size_t>(h.num_vertices()));
    for (int u = 0; u < g.num_vertices(); ++u) fiber[static_cast<size_t>(phi[static_cast<size_t>(u)])].push_back(u);

    Rat cover_radius = params.alpha * params.beta * Rat(params.r);
    res.tp.spread = params.r;
    for (size_t yi = 0; yi < lc.level_set.size(); ++yi) {
        Bits bag_bits(g.num_vertices());
        Bits h_bits(h.num_vertices());
        for (int x : lc.clusters[yi])
            for (int hv : tp_h.nodes[static_cast<size_t>(x)].bag) h_bits.set(hv);
        std::vector<Ball> cover;
        h_bits.for_each([&](int hv) {
            const auto& f = fiber[static_cast<size_t>(hv)];
            if (f.empty()) return;
            for (int u : f) bag_bits.set(u);
            cover.push_back(Ball{f.front(), cover_radius});
        });
        res.tp.nodes.push_back(TreeNode{static_cast<int>(yi), bag_bits.to_vector(),
                                        std::move(cover)});
    }
    res.tp.edges = lc.coarse_edges;

    auto out_violations = validate_tree_partition(g, res.tp);
    if (!out_violations.empty())
        throw InvariantError("coarsened partition invalid: " + out_violations.front().rule +
                             ": " + out_violations.front().detail);

    CoarsenReport& rep = res.report;
    rep.p = p;
    rep.delta_h = h_skel.max_degree();
    rep.width_h = tp_h.width();
    rep.branch_bound = static_cast<long long>(rep.width_h) * rep.delta_h;
    int t_degree = 0;
    for (int x = 0; x < nn; ++x)
        t_degree = std::max(t_degree, static_cast<int>(t_adj[static_cast<size_t>(x)].size()));
    rep.bounds_apply = t_degree <= rep.branch_bound;
    rep.cluster_bound = saturating_geo_sum(rep.branch_bound, 2 * p);
    rep.degree_bound = 1;
    {
        long long pw = saturating_pow(rep.branch_bound, p);
        rep.degree_bound = pw >= LLONG_MAX / 2 ? LLONG_MAX / 2 : 1 + pw;
    }
    for (const auto& c : lc.clusters)
        rep.max_cluster = std::max(rep.max_cluster, static_cast<int>(c.size()));
    auto coarse_deg = tree_adjacency(static_cast<int>(lc.level_set.size()), lc.coarse_edges);
    for (const auto& nb : coarse_deg)
        rep.coarse_max_degree = std::max(rep.coarse_max_degree, static_cast<int>(nb.size()));
    if (rep.bounds_apply) {
        if (rep.max_cluster > rep.cluster_bound)
            throw InvariantError("cluster size " + std::to_string(rep.max_cluster) +
                                 " exceeds its bound " + std::to_string(rep.cluster_bound));
        if (rep.coarse_max_degree > rep.degree_bound)
            throw InvariantError("coarse tree degree " + std::to_string(rep.coarse_max_degree) +
                                 " exceeds its bound " + std::to_string(rep.degree_bound));
    }
    return res;
}

TreeDecomposition lift_decomposition(const Graph& g, const DistanceGraph& dg, const PhiMap& phi,
                                     const TreeDecomposition& td_h) {
    if (dg.weighted) throw InputError("lift needs the unweighted variant");
    if (dg.sigma != 4) throw InputError("lift needs sigma = 4");
    if (dg.host_n != g.num_vertices()) throw InputError("distance graph host size mismatch");
    if (phi.size() != g.num_vertices()) throw InputError("phi size mismatch");

    auto violations = validate_tree_decomposition(dg.h, td_h);
    if (!violations.empty())
        throw InputError("input tree decomposition invalid: " + violations.front().rule + ": " +
                         violations.front().detail);
    for (const TreeNode& node : td_h.nodes)
        if (!node.cover)
            throw InputError("bag " + std::to_string(node.id) + " has no cover");

    Rat s(0);
    for (const TreeNode& node : td_h.nodes)
        for (const Ball& b : *node.cover)
            if (b.radius > s) s = b.radius;
    Rat lifted_radius = (Rat(4) * s + Rat(1)) * Rat(dg.r);

    // Member index of every host vertex's projection.
    std::vector<int> idx(static_cast<size_t>(g.num_vertices()));
    for (int u = 0; u < g.num_vertices(); ++u)
        idx[static_cast<size_t>(u)] = dg.index_of_member(phi[u]);

    TreeDecomposition out;
    out.edges = td_h.edges;
    for (const TreeNode& node : td_h.nodes) {
        Bits in_bag(dg.h.num_vertices());
        for (int hv : node.bag) in_bag.set(hv);
        std::vector<int> bag;
        for (int u = 0; u < g.num_vertices(); ++u)
            if (in_bag.test(idx[static_cast<size_t>(u)])) bag.push_back(u);
        std::vector<Ball> cover;
        for (const Ball& b : *node.cover) {
            Ball lifted{dg.member_at(b.center), lifted_radius};
            bool dup = false;
            for (const Ball& c : cover)
                if (c == lifted) {
                    dup = true;
                    break;
                }
            if (!dup) cover.push_back(lifted);
        }
        out.nodes.push_back(TreeNode{node.id, std::move(bag), std::move(cover)});
    }

    auto out_violations = validate_tree_decomposition(g, out);
    if (!out_violations.empty())
        throw InvariantError("lifted decomposition invalid: " + out_violations.front().rule +
                             ": " + out_violations.front().detail);
    return out;
}

} // namespace coarse
