#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (bad graph file, invalid parameters,
/// a structure that fails its declared preconditions).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

/// An exact enumeration would exceed the configured work budget.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what) : Error(what) {}
};

/// A postcondition that is supposed to hold by construction failed.
/// Seeing this means either a bug or an input outside the regime the
/// guarantee covers; the message names the violated condition.
struct InvariantError : Error {
    explicit InvariantError(const std::string& what) : Error(what) {}
};

/// A decomposition builder could not make progress: the separator oracle
/// failed at some frame, the recursion limit was hit, or a ball-set cap
/// was exceeded. The message identifies the frame.
struct DecomposeError : Error {
    explicit DecomposeError(const std::string& what) : Error(what) {}
};

} // namespace coarse
