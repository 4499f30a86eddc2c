#pragma once

#include <stdexcept>
#include <string>

namespace homtest {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad CSV structure, non-integer cells, unknown names.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally sound input that violates a table invariant
// (fewer than two rows or columns, zero grand total, overflow).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A simulation run could not complete (allocation or thread failure).
class ResourceError : public Error {
public:
    using Error::Error;
};

// Exact enumeration would exceed the outcome budget. Carries the number of
// outcomes the enumeration would have to visit.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, double required_outcomes)
        : Error(what), required_outcomes_(required_outcomes) {}

    double required_outcomes() const { return required_outcomes_; }

private:
    double required_outcomes_;
};

} // namespace homtest
