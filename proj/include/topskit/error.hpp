#ifndef TOPSKIT_ERROR_HPP
#define TOPSKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace topskit {

// Failure classes. The CLI maps each to a distinct exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

// A value or model violates a stated invariant (isolating interval with the
// wrong root count, non-contractive map, rho outside its range, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A computation that manipulates attractor components as sets was asked to
// run on a system whose component hulls are not certified equal to the
// components.
class UncertifiedHullError : public Error {
public:
    using Error::Error;
};

// Arithmetic domain failures: division by zero, operands from unrelated
// number fields.
class DomainError : public Error {
public:
    using Error::Error;
};

// A search exceeded its budget or cap.
class BudgetError : public Error {
public:
    using Error::Error;
};

} // namespace topskit

#endif
