#include "coarse/budget.hpp"

#include <cstdlib>
#include <string>

#include "coarse/errors.hpp"

namespace coarse {

Budgets Budgets::from_env() {
    Budgets b;
    const char* raw = std::getenv("COARSE_TW_BUDGET");
    if (raw == nullptr || *raw == '\0') return b;
    long long value = 0;
    try {
        size_t used = 0;
        value = std::stoll(raw, &used);
        if (used != std::string(raw).size()) throw InputError("");
    } catch (...) {
        throw InputError(std::string("COARSE_TW_BUDGET is not an integer: ") + raw);
    }
    if (value <= 0) throw InputError("COARSE_TW_BUDGET must be positive");
    b.enumeration_budget = value;

    int log2_floor = 0;
    while ((1LL << (log2_floor + 1)) <= value && log2_floor < 62) ++log2_floor;
    b.indicator_max_n = log2_floor;

    int tw_n = 1;
    while (tw_n < 26 && (1LL << (tw_n + 1)) * (tw_n + 1) <= value) ++tw_n;
    b.treewidth_max_n = tw_n;
    return b;
}

} // namespace coarse
