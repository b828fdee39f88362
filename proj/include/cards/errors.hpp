#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cards {

// Bad parameters, malformed configurations, or inputs outside an
// operation's domain.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A move was requested at a position where the passing rule does not apply.
class MoveNotEnabled : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// The requested target cannot be reached from the given origin.
class UnreachableTarget : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// The requested target is a dual configuration where only non-dual
// targets are meaningful.
class DualTarget : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A state count exceeded the configured node budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required_nodes,
                   std::uint64_t budget)
        : std::runtime_error(what), required(required_nodes), budget(budget) {}

    std::uint64_t required;
    std::uint64_t budget;
};

// An enumeration outgrew its path-count or path-length cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cards
