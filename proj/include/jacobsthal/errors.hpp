#pragma once

#include <stdexcept>
#include <string>

namespace jacobsthal {

/// Input outside the mathematical domain of an operation (zero denominator,
/// k <= 0, a stride r < 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A Laurent division that does not terminate with a zero remainder.
class InexactDivision : public DomainError {
public:
    InexactDivision(const std::string& what, std::string remainder)
        : DomainError(what), remainder_(std::move(remainder)) {}

    /// Rendered remainder of the failed division.
    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

/// Matrix whose determinant is not a unit of the scalar ring.
class SingularMatrix : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two routes that must agree by construction did not. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed request to the identity verifier or the CLI.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace jacobsthal
