#pragma once

#include <stdexcept>
#include <string>

namespace gr {

/// A bracketed solve ran out of iterations, lost its bracket, or a
/// post-solve verification (residual bound, grid scan) failed.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// An adaptive quadrature exceeded its evaluation budget before reaching
/// the requested tolerance.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gr
