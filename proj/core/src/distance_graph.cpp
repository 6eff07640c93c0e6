#include "coarse/distance_graph.hpp"

#include <algorithm>
#include <string>

namespace coarse {

int DistanceGraph::index_of_member(int host_v) const {
    auto it = std::lower_bound(members.begin(), members.end(), host_v);
    if (it == members.end() || *it != host_v)
        throw InputError("vertex " + std::to_string(host_v) + " is not a member");
    return static_cast<int>(it - members.begin());
}

WeightedGraph DistanceGraph::weighted_host() const {
    std::vector<std::tuple<int, int, Rat>> edges;
    Rat w = edge_weight();
    for (auto [u, v] : h.edge_list()) edges.emplace_back(u, v, w);
    return WeightedGraph::from_edges(h.num_vertices(), edges);
}

std::pair<DistanceGraph, PhiMap> build_distance_graph(const Graph& g, int r, int sigma,
                                                      bool weighted,
                                                      const std::vector<int>& members) {
    if (r < 1) throw InputError("distance graph radius must be at least 1");
    if (sigma < 3) throw InputError("sigma must be at least 3");

    std::vector<int> i_set = members;
    if (i_set.empty()) {
        i_set = max_distance_r_independent_set(g, r);
    } else {
        std::sort(i_set.begin(), i_set.end());
        if (std::adjacent_find(i_set.begin(), i_set.end()) != i_set.end())
            throw InputError("duplicate member in supplied independent set");
        for (int v : i_set)
            if (v < 0 || v >= g.num_vertices())
                throw InputError("member " + std::to_string(v) + " out of range");
    }

    int n = g.num_vertices();
    int isz = static_cast<int>(i_set.size());

    // Hop rows from every member; reused for validation, edges and phi.
    std::vector<std::vector<int>> rows(static_cast<size_t>(isz));
    for (int i = 0; i < isz; ++i) rows[static_cast<size_t>(i)] = g.bfs_hops(i_set[static_cast<size_t>(i)]);

    if (!members.empty()) {
        for (int i = 0; i < isz; ++i)
            for (int j = i + 1; j < isz; ++j) {
                int d = rows[static_cast<size_t>(i)][static_cast<size_t>(i_set[static_cast<size_t>(j)])];
                if (d >= 0 && d <= r)
                    throw InputError("supplied set is not distance-" + std::to_string(r) +
                                     " independent: members " + std::to_string(i_set[i]) +
                                     " and " + std::to_string(i_set[j]));
            }
        for (int v = 0; v < n; ++v) {
            bool covered = false;
            for (int i = 0; i < isz && !covered; ++i) {
                int d = rows[static_cast<size_t>(i)][static_cast<size_t>(v)];
                covered = d >= 0 && d <= r;
            }
            if (!covered)
                throw InputError("supplied set is not maximal: vertex " + std::to_string(v) +
                                 " is uncovered");
        }
    }

    long long threshold = static_cast<long long>(sigma) * r;
    std::vector<std::pair<int, int>> h_edges;
    for (int i = 0; i < isz; ++i)
        for (int j = i + 1; j < isz; ++j) {
            int d = rows[static_cast<size_t>(i)][static_cast<size_t>(i_set[static_cast<size_t>(j)])];
            if (d >= 0 && d <= threshold) h_edges.emplace_back(i, j);
        }

    DistanceGraph dg;
    dg.members = std::move(i_set);
    dg.h = Graph::from_edges(isz, h_edges);
    dg.r = r;
    dg.sigma = sigma;
    dg.weighted = weighted;
    dg.host_n = n;

    PhiMap phi;
    phi.to_member.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int best_member = -1;
        int best_dist = -1;
        for (int i = 0; i < isz; ++i) {
            int d = rows[static_cast<size_t>(i)][static_cast<size_t>(v)];
            if (d < 0) continue;
            if (best_member < 0 || d < best_dist) {
                best_member = dg.members[static_cast<size_t>(i)];
                best_dist = d;
            }
        }
        if (best_member < 0)
            throw InvariantError("vertex " + std::to_string(v) +
                                 " has no member in its component");
        // best_dist <= r by maximality
        if (best_dist > r)
            throw InvariantError("nearest member of vertex " + std::to_string(v) +
                                 " is unexpectedly far");
        phi.to_member[static_cast<size_t>(v)] = best_member;
    }
    return {std::move(dg), std::move(phi)};
}

QuasiIsometryCert check_quasi_isometry(const Graph& g, const DistanceGraph& dg,
                                       const PhiMap& phi) {
    int n = g.num_vertices();
    if (phi.size() != n) throw InputError("phi size mismatch");

    QuasiIsometryCert cert;
    cert.weighted = dg.weighted;
    Rat rr(dg.r);
    Rat sg(dg.sigma);
    if (dg.weighted) {
        cert.alpha = sg;
        cert.beta = sg * rr;
    } else {
        cert.alpha = sg * rr;
        cert.beta = Rat(2) * rr;
    }

    int isz = dg.h.num_vertices();
    std::vector<std::vector<int>> h_rows(static_cast<size_t>(isz));
    for (int i = 0; i < isz; ++i) h_rows[static_cast<size_t>(i)] = dg.h.bfs_hops(i);

    auto h_dist_hops = [&](int u, int v) {
        int iu = dg.index_of_member(phi[u]);
        int iv = dg.index_of_member(phi[v]);
        return h_rows[static_cast<size_t>(iu)][static_cast<size_t>(iv)];
    };

    for (int u = 0; u < n; ++u) {
        auto row = g.bfs_hops(u);
        for (int v = u + 1; v < n; ++v) {
            int dg_hops = row[v];
            int dh_hops = h_dist_hops(u, v);
            if (dg_hops < 0 && dh_hops < 0) continue;
            if (dg_hops < 0 || dh_hops < 0)
                throw InvariantError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") is connected in exactly one metric");
            ++cert.pairs_checked;
            Rat dist_g(dg_hops);
            Rat dist_h = dg.h_distance_of_hops(dh_hops);
            Rat lower_bound, upper_bound;
            if (dg.weighted) {
                lower_bound = dist_g - Rat(2) * rr;
                upper_bound = sg * dist_g + sg * rr;
            } else {
                lower_bound = dist_g / (sg * rr) - Rat(2) * rr;
                upper_bound = dist_g / (Rat(dg.sigma - 2) * rr) + Rat(1);
            }
            if (dist_h < lower_bound)
                throw InvariantError("distance lower bound violated at pair (" +
                                     std::to_string(u) + "," + std::to_string(v) + "): " +
                                     dist_h.str() + " < " + lower_bound.str());
            if (dist_h > upper_bound)
                throw InvariantError("distance upper bound violated at pair (" +
                                     std::to_string(u) + "," + std::to_string(v) + "): " +
                                     dist_h.str() + " > " + upper_bound.str());
            Rat lower_slack = dist_h - lower_bound;
            Rat upper_slack = upper_bound - dist_h;
            if (!cert.worst_lower.valid || lower_slack < cert.worst_lower.slack)
                cert.worst_lower = PairWitness{u, v, dist_g, dist_h, lower_slack, true};
            if (!cert.worst_upper.valid || upper_slack < cert.worst_upper.slack)
                cert.worst_upper = PairWitness{u, v, dist_g, dist_h, upper_slack, true};
        }
    }

    // Density of the image: every member is its own nearest image point,
    // so this is 0 whenever phi comes from the builder; computed anyway.
    Bits image(isz);
    for (int v = 0; v < n; ++v) image.set(dg.index_of_member(phi[v]));
    for (int w = 0; w < isz; ++w) {
        int best = -1;
        image.for_each([&](int img) {
            int d = h_rows[static_cast<size_t>(w)][static_cast<size_t>(img)];
            if (d >= 0 && (best < 0 || d < best)) best = d;
        });
        if (best < 0)
            throw InvariantError("H vertex " + std::to_string(w) + " cannot reach the image");
        Rat d = dg.h_distance_of_hops(best);
        if (cert.density_witness < 0 || d > cert.density) {
            cert.density = d;
            cert.density_witness = w;
        }
    }
    return cert;
}

DegreeBoundReport check_degree_bound(const DistanceGraph& dg, int m_estimate) {
    if (m_estimate < 0) throw InputError("doubling estimate must be nonnegative");
    DegreeBoundReport rep;
    rep.delta_h = dg.h.max_degree();
    int rho = 0;
    while ((1 << (rho + 1)) <= dg.sigma) ++rho; // rho = floor(log2 sigma)
    rep.rho = rho + 1;
    rep.m_estimate = m_estimate;
    long long exponent = static_cast<long long>(rep.rho) * m_estimate;
    if (exponent >= 63) {
        rep.bound_overflow = true;
        rep.bound = ~0ULL;
        rep.pass = true;
    } else {
        rep.bound = 1ULL << exponent;
        rep.pass = static_cast<unsigned long long>(rep.delta_h) < rep.bound;
    }
    return rep;
}

} // namespace coarse
