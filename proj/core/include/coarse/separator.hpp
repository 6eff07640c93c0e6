#pragma once

#include <optional>
#include <vector>

#include "coarse/cover.hpp"
#include "coarse/weight_fn.hpp"

namespace coarse {

/// Evidence that a union of balls is a balanced separator: the balls, their
/// union, and the weight function the balance was checked against.
struct SeparatorWitness {
    std::vector<Ball> balls;
    std::vector<int> union_set;
    WeightFn balanced_for;
};

/// True when every component of g - x has weight at most mu(V)/2.
/// Exact rational comparison; x need not be sorted.
bool is_balanced_separator(const Graph& g, const WeightFn& mu, const std::vector<int>& x);

/// Searches for k balls of radius r (r >= 0; radius 0 balls are single
/// vertices) whose union is a balanced separator for mu.
/// exact: lexicographic enumeration of center subsets, first hit wins,
/// C(n, k) bounded by the enumeration budget. greedy: repeatedly adds the
/// ball that minimizes the heaviest remaining component weight (ties to the
/// lowest center id), stopping early once balanced; returns nullopt if k
/// balls were not enough.
std::optional<SeparatorWitness> find_separator(const Graph& g, const WeightFn& mu, int k, int r,
                                               SearchMode mode, const Budgets& budgets);

/// Smallest k <= k_max such that every 0/1 vertex weighting admits a
/// balanced separator made of k radius-r balls; nullopt when even k_max
/// fails. Sweeps all 2^n indicator weightings, so n is gated by
/// budgets.indicator_max_n.
std::optional<int> bsn_over_indicators(const Graph& g, int r, int k_max, const Budgets& budgets);

} // namespace coarse
