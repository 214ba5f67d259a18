#pragma once

#include <stdexcept>
#include <string>

namespace fuzzcalc {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside its mathematical domain (alpha outside [0,1], t outside I).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed data: mismatched envelope lengths, non-monotone grids.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Binary operation on fuzzy numbers discretized on different alpha grids.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

// Closed form requested for a model of the wrong sign class.
class CaseError : public Error {
public:
    using Error::Error;
};

// A model assumption (e.g. non-negative initial condition) does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Floating-point failure of a solution procedure.
class NumericError : public Error {
public:
    using Error::Error;
};

class SingularError : public NumericError {
public:
    using NumericError::NumericError;
};

class DivergenceError : public NumericError {
public:
    DivergenceError(const std::string& what, double last_valid_t)
        : NumericError(what), last_valid_t_(last_valid_t) {}

    double last_valid_t() const noexcept { return last_valid_t_; }

private:
    double last_valid_t_;
};

}  // namespace fuzzcalc
