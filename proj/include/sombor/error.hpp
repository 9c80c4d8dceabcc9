#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sombor {

enum class ErrorKind {
    invalid_argument,  // bad scalar input (degree out of domain, malformed text)
    validation,        // edge set is not a tree
    stale_swap,        // swap applied to a tree that lacks its removed edges
    precondition,      // structural precondition violated (e.g. path condition)
    budget_exceeded,   // enumeration larger than the configured budget
    step_limit,        // local search exceeded its step guard
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : Error(ErrorKind::budget_exceeded,
                "enumeration budget exceeded: " + std::to_string(required) + " labeled trees > budget " +
                    std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    /// Saturates at UINT64_MAX when the true count does not fit.
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace sombor
