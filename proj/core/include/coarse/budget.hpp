#pragma once

namespace coarse {

/// Work limits for the exact enumeration routines. The defaults are
/// deliberate: exhaustive searches stay exact up to these sizes and refuse
/// (BudgetError) beyond them instead of degrading silently.
///
/// Setting the environment variable COARSE_TW_BUDGET to a positive integer
/// replaces enumeration_budget and rescales the two size gates to match:
/// indicator_max_n becomes floor(log2(budget)) and treewidth_max_n the
/// largest n with 2^n * n <= budget.
struct Budgets {
    long long enumeration_budget = 10'000'000; ///< max candidate sets an exact search may visit
    int indicator_max_n = 20;                  ///< max n for the 2^n indicator-weight sweep
    int treewidth_max_n = 12;                  ///< max n for exact treewidth

    static Budgets from_env();
};

} // namespace coarse
