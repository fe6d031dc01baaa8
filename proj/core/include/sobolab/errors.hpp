#pragma once

#include <stdexcept>
#include <string>

namespace sobolab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad measure description, violated precondition, unknown key.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Numerical failure (singular section, conditioning cap, non-convergence).
class NumericError : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public NumericError {
public:
    NotPositiveDefinite(int pivot, int size)
        : NumericError("matrix of order " + std::to_string(size) +
                       " is not numerically positive definite (pivot " + std::to_string(pivot) + ")")
        , pivot_(pivot)
        , size_(size)
    {
    }

    int pivot() const noexcept { return pivot_; }
    int size() const noexcept { return size_; }

private:
    int pivot_;
    int size_;
};

class ConditioningError : public NumericError {
public:
    ConditioningError(double condition, int size)
        : NumericError("Gram section of order " + std::to_string(size) + " exceeds the conditioning cap (cond ~ " +
                       std::to_string(condition) + ")")
        , condition_(condition)
    {
    }

    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

class ConvergenceFailure : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace sobolab
