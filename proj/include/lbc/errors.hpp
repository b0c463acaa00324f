#pragma once

#include <stdexcept>
#include <string>

namespace lbc {

// Domain errors (CLI exit code 1).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resource exhaustion (CLI exit code 2).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RadiusOutOfRange : DomainError {
    using DomainError::DomainError;
};

struct AlreadyInSpan : DomainError {
    AlreadyInSpan() : DomainError("vector already in span") {}
};

struct EmptySubspace : DomainError {
    EmptySubspace() : DomainError("subspace has dimension 0") {}
};

struct InfeasibleZeroWeight : DomainError {
    InfeasibleZeroWeight()
        : DomainError("forbidden set contains weight 0; the zero vector lies in every subspace") {}
};

struct NotDisjoint : DomainError {
    using DomainError::DomainError;
};

struct InnerTooShallow : DomainError {
    using DomainError::DomainError;
};

struct BlockCountTooSmall : DomainError {
    using DomainError::DomainError;
};

struct ForbiddenMultiple : DomainError {
    using DomainError::DomainError;
};

struct FormatError : DomainError {
    using DomainError::DomainError;
};

struct MissingDependency : DomainError {
    using DomainError::DomainError;
};

struct CapExceeded : ResourceError {
    using ResourceError::ResourceError;
};

struct BudgetExhausted : ResourceError {
    using ResourceError::ResourceError;
};

} // namespace lbc
