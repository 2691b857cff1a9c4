#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

// Input that violates a documented precondition.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured enumeration cap or budget was exceeded.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical invariant that should hold by a proven theorem failed.
// Reaching this means an implementation bug, never bad input.
struct CriticalFinding : std::runtime_error {
    explicit CriticalFinding(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kneser
