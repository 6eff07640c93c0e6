#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coarse/bits.hpp"
#include "coarse/errors.hpp"
#include "coarse/rational.hpp"

namespace coarse {

/// Finite simple undirected graph over vertices 0..n-1.
/// Adjacency lists are sorted ascending; the symmetry and no-loop /
/// no-multi-edge invariants are enforced at construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) {
        if (n < 0) throw InputError("negative vertex count");
        n_ = n;
        adj_.resize(static_cast<size_t>(n));
    }

    /// Builds from an edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    /// Edge list with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;

    /// Hop distances from src; -1 marks unreachable vertices.
    std::vector<int> bfs_hops(int src) const;

    bool is_connected() const;

private:
    int n_{0};
    long long m_{0};
    std::vector<std::vector<int>> adj_;
};

/// Undirected graph with nonnegative rational edge weights.
class WeightedGraph {
public:
    struct Arc {
        int to;
        Rat weight;
    };

    WeightedGraph() = default;
    explicit WeightedGraph(int n) {
        if (n < 0) throw InputError("negative vertex count");
        n_ = n;
        adj_.resize(static_cast<size_t>(n));
    }

    static WeightedGraph from_edges(int n,
                                    const std::vector<std::tuple<int, int, Rat>>& edges);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }
    std::span<const Arc> neighbors(int v) const { return adj_[v]; }

    /// Shortest-path distances from src; nullopt marks unreachable vertices.
    std::vector<std::optional<Rat>> dijkstra(int src) const;

    /// Smallest edge weight, or nullopt for an edgeless graph.
    std::optional<Rat> min_edge_weight() const;

    /// The underlying unweighted graph (same adjacency).
    Graph skeleton() const;

    std::vector<std::tuple<int, int, Rat>> edge_list() const;

private:
    int n_{0};
    long long m_{0};
    std::vector<std::vector<Arc>> adj_;
};

/// Closed ball description: all vertices within distance radius of center.
struct Ball {
    int center{0};
    Rat radius{0};

    friend bool operator==(const Ball& a, const Ball& b) {
        return a.center == b.center && a.radius == b.radius;
    }
};

/// Single-source distance table.
/// Invariant: dist[source] = 0 and every reachable vertex v satisfies the
/// edge triangle inequality with equality along some incident edge.
struct DistanceMap {
    int source{0};
    std::vector<Rat> dist;          ///< valid only where reachable[v]
    std::vector<uint8_t> reachable; ///< 0/1 per vertex
};

DistanceMap distance_map(const Graph& g, int source);
DistanceMap distance_map(const WeightedGraph& g, int source);

/// Vertices within (hop) distance radius of center, ascending.
std::vector<int> ball_vertices(const Graph& g, int center, const Rat& radius);
std::vector<int> ball_vertices(const WeightedGraph& g, int center, const Rat& radius);

Bits ball_bits(const Graph& g, int center, int radius);

/// Connected components of g - removed. Components are listed by their
/// minimum vertex, each sorted ascending; together they partition
/// V minus removed.
std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& removed = {});

/// Component structure over an explicit vertex mask (internal form).
std::vector<Bits> components_bits(const Graph& g, const Bits& alive);

/// Greedy inclusion-maximal distance-r independent set: scans vertices in
/// ascending order and keeps v when no kept vertex lies within distance r.
/// The result is both independent (pairwise distance > r) and maximal
/// (every vertex is within distance r of some member).
std::vector<int> max_distance_r_independent_set(const Graph& g, int r);

/// Checks pairwise distance > r.
bool is_distance_r_independent(const Graph& g, const std::vector<int>& verts, int r);

/// Lazy all-sources hop-distance cache over a fixed graph.
class DistanceOracle {
public:
    explicit DistanceOracle(const Graph& g) : g_(&g), rows_(g.num_vertices()) {}

    const std::vector<int>& row(int src) const;
    int dist(int u, int v) const { return row(u)[v]; } ///< -1 if unreachable

    const Graph& graph() const { return *g_; }

private:
    const Graph* g_;
    mutable std::vector<std::unique_ptr<std::vector<int>>> rows_;
};

} // namespace coarse
