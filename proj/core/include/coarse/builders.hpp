#pragma once

#include "coarse/budget.hpp"
#include "coarse/cover.hpp"
#include "coarse/decomposition.hpp"
#include "coarse/graph.hpp"

namespace coarse {

/// Set of balls whose radii are positive integer multiples of a base radius.
struct RoundBallSet {
    int base_r{1};
    std::vector<Ball> balls;

    /// Sum over balls of 2^(radius / base_r). Exact; throws InvariantError
    /// if a radius is not a positive multiple of base_r or the exponent
    /// exceeds 62 bits.
    unsigned long long potential() const;

    /// Largest radius, 0 when empty.
    Rat max_radius() const;

    bool is_round() const;
};

struct BuilderParams {
    int k{1};                                 ///< separator ball budget
    int r{1};                                 ///< base radius
    long long gamma_cap{0};                   ///< working cover-size cap
    int alpha{0};                             ///< crowding constant 2 + ceil(log2 2k)
    SearchMode oracle_mode{SearchMode::exact};
    int recursion_limit{64};
    bool strict_checks{true};                 ///< assert the per-step claims
    Budgets budgets{};
};

/// alpha = 2 + ceil(log2 2k).
int crowding_alpha(int k);

/// Gamma = floor(2000 * k^2 * log2 k); 0 for k = 1 (the round builder
/// requires k >= 2).
long long default_gamma_cap(int k);

/// Params with alpha and gamma_cap derived from k.
BuilderParams make_builder_params(int k, int r, SearchMode mode = SearchMode::exact);

/// Crowding elimination. Repeatedly (radius multiple ell ascending, then
/// vertex id ascending): when at least 2^alpha balls of radius exactly
/// ell*r have centers within alpha*r of x, all of them are replaced by one
/// ball of radius (ell+alpha)*r centered at x. Afterwards balls whose vertex
/// set is contained in another ball's vertex set are dropped (equal sets
/// keep the canonically first ball). Never grows |B| or the potential and
/// never shrinks the union.
RoundBallSet uncrowd(const Graph& g, const RoundBallSet& b, const BuilderParams& params);

/// Recursive decomposition with plain radius-r covers: each step asks the
/// separator oracle to balance the indicator weight of the active component,
/// bags the separator and recurses into the remaining components. Every bag
/// cover has at most k*(ceil(log2 n) + 2) balls of radius exactly r.
TreeDecomposition decompose_simple(const Graph& g, const BuilderParams& params);

/// Recursive decomposition with round covers and potential accounting:
/// uncrowds the inherited cover, balances both the component indicator and
/// the ball-center indicator, and passes each child a rebuilt cover
/// (near-separator balls + widened separator balls + local balls). Bag
/// covers stay within gamma_cap + 2k balls; potentials stay within
/// 4k*(ceil(log2 n) + 1).
TreeDecomposition decompose_round(const Graph& g, const BuilderParams& params);

} // namespace coarse
