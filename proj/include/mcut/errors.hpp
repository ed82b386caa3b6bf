#pragma once
#include <stdexcept>
#include <string>

namespace mcut {

// Input violates a solver's structural gate (connectivity, bipartiteness,
// diameter/radius bound).
struct ClassViolationError : std::runtime_error {
    explicit ClassViolationError(const std::string& what) : std::runtime_error(what) {}
};

// Perfect-matching query on a graph class the matching module does not cover
// (non-bipartite with even order).
struct UnsupportedClassError : ClassViolationError {
    explicit UnsupportedClassError(const std::string& what) : ClassViolationError(what) {}
};

// Exhaustive enumeration refused because the instance exceeds the size budget.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Search gave up after the configured wall-clock limit; distinct from "no".
struct TimeoutError : std::runtime_error {
    explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcut
