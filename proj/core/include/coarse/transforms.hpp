#pragma once

#include <optional>
#include <vector>

#include "coarse/budget.hpp"
#include "coarse/decomposition.hpp"
#include "coarse/distance_graph.hpp"
#include "coarse/separator.hpp"

namespace coarse {

struct MapCheckResult {
    bool ok{true};
    PairWitness worst_lower;
    PairWitness worst_upper;
    Rat density;              ///< max over H vertices of weighted distance to the image
    int density_witness{-1};
    long long pairs_checked{0};
    std::string failure;      ///< first violated pair, empty when ok
};

/// Verifies that phi : V(G) -> V(H) is an (alpha, beta)-quasi-isometry:
/// dist_G/alpha - beta <= dist_H(phi u, phi v) <= alpha*dist_G + beta for
/// all pairs, and every H vertex lies within beta of the image. Distances in
/// H are edge-weighted. Pairs disconnected on both sides are vacuous; a pair
/// disconnected on exactly one side is a violation.
MapCheckResult check_map_quasi_isometry(const Graph& g, const WeightedGraph& h,
                                        const std::vector<int>& phi, const Rat& alpha,
                                        const Rat& beta);

struct WeightedTransfer {
    std::vector<int> x_h;            ///< separator in H (member indices, ascending)
    std::vector<Ball> source_balls;  ///< the oracle's balls in the host graph
    std::vector<int> reps;           ///< chosen member index per ball center
    int m_hat{0};
    unsigned long long size_bound{0}; ///< k * 2^(6 m_hat)
    bool bound_overflow{false};
};

/// Pushes a ball-separator of the host through a weighted distance graph
/// (sigma = 3): extends mu_H to the host by zeros, finds k balanced radius-r
/// balls there, snaps each center to its nearest member (ties to the lowest
/// id) and returns the union of the members' second neighborhoods in H.
/// The result is asserted balanced for mu_H and within k * 2^(6 m_hat).
WeightedTransfer separator_transfer_weighted(const Graph& g, const DistanceGraph& dg,
                                             const WeightFn& mu_h, int k, int m_hat,
                                             SearchMode mode, const Budgets& budgets);

struct UnweightedTransfer {
    SeparatorWitness witness_h;      ///< d radius-1 balls in H
    std::vector<Ball> source_balls;  ///< the oracle's balls in the host graph
    std::vector<int> y;              ///< projected centers (member indices, ascending)
};

/// Same idea for the unweighted variant (sigma = 4): the oracle's d ball
/// centers are projected through phi and each projection contributes its
/// radius-1 ball in H. Asserted balanced for mu_H.
UnweightedTransfer separator_transfer_unweighted(const Graph& g, const DistanceGraph& dg,
                                                 const PhiMap& phi, const WeightFn& mu_h, int d,
                                                 SearchMode mode, const Budgets& budgets);

struct CoarseningParams {
    Rat alpha{1};  ///< multiplicative distortion, >= 1
    Rat beta{1};   ///< additive distortion is beta*r, beta >= 1
    Rat gamma{1};  ///< every H edge weighs at least gamma*r
    int r{1};

    /// ceil((alpha + beta) / gamma), the level-set stride.
    int p() const;
};

/// Level structure of a tree: the root, node depths, the level set L of
/// depths divisible by p, one cluster per L node and the coarse tree over L.
/// Purely combinatorial; assignment_errors lists tree nodes landing in zero
/// or several clusters (the cluster rules are not a partition on every
/// tree).
struct LevelClusters {
    int root{0};
    int p{1};
    std::vector<int> depth;
    std::vector<int> level_set;                   ///< L, ascending node ids
    std::vector<std::vector<int>> clusters;       ///< per L position
    std::vector<std::pair<int, int>> coarse_edges; ///< over L positions
    std::vector<int> cluster_of;                  ///< per node: L position, -1 if unassigned
    std::vector<int> assignment_errors;           ///< nodes in != 1 clusters
};

/// Clusters the nodes of the tree (num_nodes, tree_edges) rooted at the
/// lowest id: L = depths divisible by p; the root keeps everything above
/// depth 2p; an L node y keeps the x with p <= dist(x, y) < 2p below it.
/// Coarse edges join L nodes at tree distance exactly p and depth gap
/// exactly p. Never throws; callers inspect assignment_errors.
LevelClusters build_level_clusters(int num_nodes, const std::vector<std::pair<int, int>>& edges,
                                   int p);

struct CoarsenReport {
    int p{0};
    int delta_h{0};           ///< max degree of H
    int width_h{0};           ///< max bag size of the input partition
    long long branch_bound{0}; ///< width_h * delta_h, the wlog tree-degree cap
    bool bounds_apply{false}; ///< input tree degree within branch_bound
    long long cluster_bound{0}; ///< sum of branch_bound^i for i < 2p (saturated)
    long long degree_bound{0};  ///< 1 + branch_bound^p (saturated)
    int max_cluster{0};
    int coarse_max_degree{0};
};

struct CoarsenResult {
    TreePartition tp;
    LevelClusters clusters;
    CoarsenReport report;
};

/// Pulls a tree partition of H back to the host through phi and coarsens it
/// level by level: bags of a cluster merge into one bag. Requires every H
/// edge to weigh at least gamma*r and phi to be an (alpha, beta*r)
/// quasi-isometry (checked). The output is asserted to be a tree partition
/// of G with spread r; each bag gets one ball of radius alpha*beta*r per
/// fiber it contains. Cluster and degree bounds are asserted whenever the
/// input tree degree is within width_h * delta_h.
CoarsenResult coarsen_tree_partition(const Graph& g, const WeightedGraph& h,
                                     const std::vector<int>& phi, const TreePartition& tp_h,
                                     const CoarseningParams& params);

/// Pulls a tree decomposition of an unweighted distance graph (sigma = 4)
/// back to the host: bag*(t) is the union of the fibers of bag(t). Every
/// input bag must carry a cover; the output bag reuses the cover's centers
/// (as host vertices) with radius (4s+1)*r, s the largest input cover
/// radius. The result is asserted valid, covers included.
TreeDecomposition lift_decomposition(const Graph& g, const DistanceGraph& dg, const PhiMap& phi,
                                     const TreeDecomposition& td_h);

} // namespace coarse
