#pragma once

#include <optional>
#include <vector>

#include "coarse/graph.hpp"

namespace coarse {

/// Distance graph over an inclusion-maximal distance-r independent set I of
/// a host graph. H's vertices are 0..|I|-1, the positions in the ascending
/// member list; members at host distance <= sigma*r are adjacent. In the
/// weighted variant every edge carries weight sigma*r, so H distances are
/// hop counts times sigma*r.
struct DistanceGraph {
    std::vector<int> members; ///< I as host vertex ids, ascending
    Graph h;                  ///< adjacency over member indices
    int r{1};
    int sigma{3};
    bool weighted{true};
    int host_n{0};

    Rat edge_weight() const { return Rat(sigma) * Rat(r); }

    /// H distance between member indices given their hop count.
    Rat h_distance_of_hops(int hops) const {
        return weighted ? Rat(hops) * edge_weight() : Rat(hops);
    }

    int index_of_member(int host_v) const;
    int member_at(int index) const { return members[static_cast<size_t>(index)]; }

    /// Materializes the weighted variant as an explicit WeightedGraph.
    WeightedGraph weighted_host() const;
};

/// Projection of host vertices to their nearest member (ties to the lowest
/// member id). Values are host vertex ids of members.
struct PhiMap {
    std::vector<int> to_member;

    int operator[](int v) const { return to_member[static_cast<size_t>(v)]; }
    int size() const { return static_cast<int>(to_member.size()); }
};

/// Builds H(G, I, r, sigma) and the projection phi. When members is empty
/// the greedy ascending independent set is used; a supplied member list is
/// validated for independence and maximality first.
std::pair<DistanceGraph, PhiMap> build_distance_graph(const Graph& g, int r, int sigma,
                                                      bool weighted,
                                                      const std::vector<int>& members = {});

struct PairWitness {
    int u{-1};
    int v{-1};
    Rat dist_g;
    Rat dist_h;
    Rat slack;
    bool valid{false};
};

/// Certificate that phi distorts distances within the advertised envelope.
/// weighted variant: dist_G - 2r <= dist_H <= sigma*dist_G + sigma*r, i.e.
/// phi is a (sigma, sigma*r)-quasi-isometry. unweighted variant:
/// dist_G/(sigma*r) - 2r <= dist_H <= dist_G/((sigma-2)*r) + 1. The cert
/// stores the (alpha, beta) form the envelope implies plus the minimum-slack
/// pairs found by the exhaustive sweep.
struct QuasiIsometryCert {
    Rat alpha;
    Rat beta;
    bool weighted{true};
    PairWitness worst_lower;
    PairWitness worst_upper;
    Rat density;    ///< max over H vertices of distance to phi's image
    int density_witness{-1};
    long long pairs_checked{0};
};

/// Checks every host vertex pair against the envelope above. Pairs that are
/// disconnected in both metrics are vacuous; a pair disconnected in exactly
/// one is a violation. Throws InvariantError naming the first violated pair.
QuasiIsometryCert check_quasi_isometry(const Graph& g, const DistanceGraph& dg,
                                       const PhiMap& phi);

struct DegreeBoundReport {
    int delta_h{0};
    int rho{0};
    int m_estimate{0};
    unsigned long long bound{0};
    bool bound_overflow{false};
    bool pass{false};
};

/// Max degree of H against the doubling bound 2^(rho * m), rho the number
/// of doublings needed to go from radius sigma*r/2^rho <= r/2 up to sigma*r,
/// i.e. rho = floor(log2 sigma) + 1.
DegreeBoundReport check_degree_bound(const DistanceGraph& dg, int m_estimate);

} // namespace coarse
