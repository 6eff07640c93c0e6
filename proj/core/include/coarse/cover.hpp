#pragma once

#include <optional>
#include <vector>

#include "coarse/budget.hpp"
#include "coarse/graph.hpp"

namespace coarse {

enum class SearchMode { exact, greedy };

SearchMode search_mode_from_name(const std::string& name);
std::string search_mode_name(SearchMode mode);

/// Result of a ball-cover search.
/// exact == true: produced by exhaustive enumeration; cover == nullopt is a
/// proof that no k balls cover the set. exact == false: greedy result; the
/// cover always exists but may use more than k balls.
struct CoverSearch {
    std::optional<std::vector<Ball>> cover;
    bool exact{true};
};

/// Exhaustive search for k balls of radius r covering A. Enumerates center
/// subsets of size min(k, n) in lexicographic order and returns the first
/// witness, so the answer is deterministic. Throws BudgetError when C(n, k)
/// exceeds budgets.enumeration_budget.
std::optional<std::vector<Ball>> cover_exact(const Graph& g, const std::vector<int>& a, int k,
                                             const Rat& radius, const Budgets& budgets);

/// Greedy max-coverage: repeatedly picks the ball covering the most
/// still-uncovered vertices of A, ties to the lowest center id.
std::vector<Ball> cover_greedy(const Graph& g, const std::vector<int>& a, const Rat& radius);

CoverSearch is_coverable(const Graph& g, const std::vector<int>& a, int k, const Rat& radius,
                         SearchMode mode, const Budgets& budgets);

/// Greedy upper estimate of the doubling dimension: the least m such that
/// for every vertex u and every integer radius 1 <= r' <= radius_cap the
/// greedy cover of Ball(u, 2r') by radius-r' balls uses at most 2^m balls.
/// Probes integer radii only, so scales that only appear at fractional radii
/// are invisible to it.
int estimate_doubling_dimension(const Graph& g, int radius_cap);

/// Smallest m >= 0 with 2^m >= count (count >= 1).
int ceil_log2(long long count);

/// min(C(n, k), cap + 1) without overflow.
long long binomial_capped(int n, int k, long long cap);

} // namespace coarse
