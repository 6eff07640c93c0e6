#pragma once

#include <cstdint>
#include <string>

#include "coarse/graph.hpp"

namespace coarse {

Graph make_path(int n);
Graph make_cycle(int n); ///< n >= 3
Graph make_grid(int rows, int cols); ///< row-major vertex numbering
Graph make_path_universal(int n); ///< path 0..n-1 plus universal vertex n
Graph make_binary_tree(int n); ///< heap numbering, children 2i+1 and 2i+2

/// n seeded points on a side x side integer grid, edges between points at
/// L1 distance <= threshold. Coinciding points are allowed and adjacent.
Graph make_random_geometric(int n, int side, int threshold, std::uint64_t seed);

/// Seeded G(n, p) with an exact rational probability: each pair u < v in
/// lexicographic order consumes one bounded draw and keeps the edge when the
/// draw falls below p's numerator (out of its denominator).
Graph make_gnp(int n, const Rat& prob, std::uint64_t seed);

/// Parameters naming one generated graph; equal specs give equal graphs.
struct FamilySpec {
    std::string family; ///< path, cycle, grid, path_universal, binary_tree,
                        ///< random_geometric, gnp
    int n{0};
    int rows{0};
    int cols{0};
    int side{0};
    int threshold{0};
    Rat prob{0};
    std::uint64_t seed{0};
};

Graph generate(const FamilySpec& spec);

} // namespace coarse
