#pragma once

#include <stdexcept>
#include <string>

namespace orbhrr {

// Base of every error thrown by the library. The CLI maps the subclasses
// onto exit codes: usage/schema -> 2, model integrity -> 3, consistency -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in cyclotomic fields that were not embedded into a common one.
class AmbientFieldError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

// A value that must be rational (or integral) is not.
class ExactnessError : public Error {
public:
    using Error::Error;
};

// Non-invertible request in a polynomial quotient ring.
class RingError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// Invalid Cayley table, character from another group, bad character table.
class GroupError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class ParseError : public SchemaError {
public:
    using SchemaError::SchemaError;
};

// A model whose data contradicts a derived identity; carries the residual.
class ModelIntegrityError : public Error {
public:
    ModelIntegrityError(const std::string& what, std::string residual)
        : Error(what), residual_(std::move(residual)) {}

    const std::string& residual() const noexcept { return residual_; }

private:
    std::string residual_;
};

// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace orbhrr
