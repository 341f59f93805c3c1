#pragma once

#include <stdexcept>
#include <string>

namespace pseudogas {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class NonPositiveInput : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class SpinStatisticsMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DomainError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// The requested state lies past the semi-classical guard (Bose z > 0.99).
class OutOfSemiclassicalRange : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// An iterative method stopped without meeting its tolerance.
class NoConvergence : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public NoConvergence {
public:
    using NoConvergence::NoConvergence;
};

/// A lattice or enumeration would exceed its configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class LatticeTooLarge : public BudgetExceeded {
public:
    using BudgetExceeded::BudgetExceeded;
};

class EnumerationTooLarge : public BudgetExceeded {
public:
    using BudgetExceeded::BudgetExceeded;
};

}  // namespace pseudogas
