#pragma once

#include <stdexcept>

namespace ecr {

// Relation or orientation input contains a directed cycle.
struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds a hard enumeration size limit.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force enumeration would exceed the configured work budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input (expression grammar, serialized data, JSON schema).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ecr
