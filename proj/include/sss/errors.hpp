#pragma once

#include <stdexcept>
#include <string>

namespace sss {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument values (budgets out of range, infeasible generator params, ...).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid inputs (asymmetric adjacency, negative weights, ...).
class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};

// Vector/matrix size mismatches.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Problem too large for the requested dense path.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// A generator failed to produce a valid (connected) graph within its retry budget.
class GenerationError : public Error {
public:
    explicit GenerationError(const std::string& msg) : Error(msg) {}
};

// Numerical failure: singular submatrix, non-convergent iteration, ...
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// File parse failure; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Filesystem/IO failure.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace sss
