#pragma once

#include "coarse/budget.hpp"
#include "coarse/graph.hpp"

namespace coarse {

/// Exact treewidth by dynamic programming over elimination orders
/// (subset DP, O(2^n * n^2) time and 2^n bytes). Gated by
/// budgets.treewidth_max_n. An edgeless graph has treewidth 0; the empty
/// graph is defined to have treewidth 0 as well.
int exact_treewidth(const Graph& g, const Budgets& budgets);

} // namespace coarse
