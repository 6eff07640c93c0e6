#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarse/budget.hpp"
#include "coarse/cover.hpp"
#include "coarse/graph.hpp"
#include "coarse/weight_fn.hpp"

namespace coarse {

/// Node of a tree decomposition or tree partition. id equals the node's
/// index; bags are kept sorted ascending. A node may carry a ball cover of
/// its bag (centers and radii in the host graph).
struct TreeNode {
    int id{0};
    std::vector<int> bag;
    std::optional<std::vector<Ball>> cover;
};

struct TreeDecomposition {
    std::vector<TreeNode> nodes;
    std::vector<std::pair<int, int>> edges;

    int width() const; ///< max bag size - 1, -1 when empty
};

/// Tree partition: bags partition V(G) and every edge joins the same or
/// adjacent bags. spread is the claimed spread (pairs at distance <= spread
/// land in the same or adjacent bags); validate_tree_partition checks it.
struct TreePartition {
    std::vector<TreeNode> nodes;
    std::vector<std::pair<int, int>> edges;
    int spread{1};

    int width() const; ///< max bag size
};

/// A failed validation rule with a human-readable witness.
struct Violation {
    std::string rule;
    std::string detail;
};

/// Checks: ids dense and equal to index, edges form a tree, bags sorted and
/// in range, every vertex in some bag, every edge inside some bag, the bags
/// containing each vertex induce a connected subtree, and attached covers
/// really cover their bags. Returns all violations found (empty = valid).
std::vector<Violation> validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Checks: ids/tree/bag hygiene as above, bags partition V(G), every edge
/// joins the same or adjacent bags, pairs within distance spread land in the
/// same or adjacent bags, and attached covers cover their bags.
std::vector<Violation> validate_tree_partition(const Graph& g, const TreePartition& tp);

/// Subdivides every tree edge: the new node of edge xy gets bag(x) u bag(y).
/// Original nodes keep their ids and bags; subdivision nodes are appended in
/// sorted edge order. A subdivision node gets the deduped concatenation of
/// the endpoint covers when both are present. Widths: k -> 2k (bag sizes).
TreeDecomposition tree_partition_to_tree_decomposition(const Graph& g, const TreePartition& tp);

/// Orients every tree edge toward the heavier side, where each side of edge
/// ab weighs mu of the union of all bags on that side (a vertex in bags on
/// both sides counts for both). Ties orient toward the lower node id.
/// Returns the lowest sink; its bag is asserted balanced for mu.
int balanced_bag(const Graph& g, const TreeDecomposition& td, const WeightFn& mu);

struct BagCoverStats {
    int node{0};
    bool from_attached{false};
    bool found{true};
    int size{0};
    Rat max_radius{0};
    bool round{false}; ///< all radii positive integer multiples of the base radius
    unsigned long long potential{0}; ///< sum of 2^(radius/r) when round
};

struct CoverStats {
    std::vector<BagCoverStats> per_bag;
    int max_size{0};
    std::optional<unsigned long long> max_potential;
    bool all_round{true};
    bool all_found{true};
};

/// Per-bag coverability report. Attached covers are measured as-is; bags
/// without one get a (k, r) cover search in the given mode.
CoverStats coverability_stats(const Graph& g, const TreeDecomposition& td, int r, int k,
                              SearchMode mode, const Budgets& budgets);

/// BFS layering: bags are the BFS levels of each component (components
/// chained one after another), tree is a path. A cheap valid tree partition
/// of spread 1, handy as pipeline input.
TreePartition layered_tree_partition(const Graph& g);

/// Adjacency lists of a tree given as an edge list over nodes 0..n-1.
/// Rejects nothing; validators decide whether it is actually a tree.
std::vector<std::vector<int>> tree_adjacency(int num_nodes,
                                             const std::vector<std::pair<int, int>>& edges);

/// Hop distances in a tree/forest given adjacency lists; -1 unreachable.
std::vector<int> tree_bfs_hops(const std::vector<std::vector<int>>& adj, int src);

} // namespace coarse
