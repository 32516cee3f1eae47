#pragma once

#include <stdexcept>
#include <string>

namespace qhm {

// Exit-code mapping in the CLI: UsageError -> 2, the rest -> 3,
// RealizationError from `realize` -> 1.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegenerateInputError : DomainError {
    using DomainError::DomainError;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistencyError : NumericalError {
    using NumericalError::NumericalError;
};

struct RealizationError : std::runtime_error {
    RealizationError(std::string condition, const std::string& what)
        : std::runtime_error(what), condition_(std::move(condition)) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

}  // namespace qhm
